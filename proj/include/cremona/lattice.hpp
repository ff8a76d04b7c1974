#pragma once

#include <cstddef>
#include <utility>

#include "cremona/classes.hpp"

namespace cremona {

/// Bilinear pairing <C,C'> = delta*delta' - 2*sum mu_i*mu_i'. Invariant
/// under matched cubo-cubic transformations. Shorter vector is zero-padded.
Int pairing(const CurveClass& c1, const CurveClass& c2);

/// The invariant class (4; 1^r).
CurveClass canonical_k(std::size_t r);

/// Intersection product L.C = d*delta - sum m_i*mu_i.
Int intersect(const SystemClass& system, const CurveClass& curve);

/// Action on a curve class: gamma = delta - sum of the four base
/// multiplicities; degree gains 2*gamma, the base multiplicities gain gamma.
/// The returned step records the base (sorted) and gamma.
std::pair<CurveClass, CremonaStep> cremona_curve(const CurveClass& c, BaseQuad base);

/// Action on a system class: k = 2d - sum of the four base multiplicities;
/// degree and base multiplicities gain k. No clamping here: negative entries
/// are returned as-is and interpreted by the speciality layer.
std::pair<SystemClass, CremonaStep> cremona_system(const SystemClass& s, BaseQuad base);

/// Action on a blown-up-quadric class: k = a + b - sum of the four base
/// multiplicities; both bidegrees and the base multiplicities gain k.
/// Multiplicities outside the base are left unchanged.
QuadricClass cremona_quadric(const QuadricClass& q, BaseQuad base);

/// Intersection form of the blown-up quadric:
/// a1*b2 + a2*b1 - sum mu_j*mu_j'.
Int quadric_pair(const QuadricClass& q1, const QuadricClass& q2);

/// Quadric-lattice representative (alpha+1, alpha; mu_1, ..., mu_r) of a
/// curve class of odd degree delta = 2*alpha + 1. Throws std::domain_error
/// for even or non-positive degree (the class is not of elementary shape).
QuadricClass to_quadric(const CurveClass& c);

/// True iff the class is the line through two points, i.e. normalizes
/// to (1; 1, 1).
bool is_line(const CurveClass& c);

}  // namespace cremona
