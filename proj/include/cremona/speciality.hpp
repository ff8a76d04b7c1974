#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cremona/classes.hpp"
#include "cremona/classify.hpp"

namespace cremona {

/// Virtual dimension of the planar system of degree-d curves with point
/// multiplicities m: C(d+2,2) - sum C(m_i+1,2) - 1, with C(n,k) = 0 for n < k.
Int vdim_p2(Int d, std::span<const Int> mult);

/// Space analogue: C(d+3,3) - sum C(m_i+2,3) - 1.
Int vdim_p3(const SystemClass& system);

/// Type of the plane curve obtained by projecting from marked point i.
struct PlanarType {
    Int degree{0};
    std::vector<Int> mult;

    friend bool operator==(const PlanarType&, const PlanarType&) = default;
};

Int vdim_p2(const PlanarType& p);

/// Projection from point i (0-based): degree drops by mu_i, the remaining
/// multiplicities keep their order.
PlanarType project_from_point(const CurveClass& c, std::size_t i);

struct StandardFormResult {
    SystemClass reduced;               // canonical; degree stays negative when empty
    std::vector<CremonaStep> steps;    // each applied to the sorted state on indices {0,1,2,3}
    bool empty{false};                 // degree fell below 0
};

/// Degree reduction to standard form: sort descending, and while
/// 2d < m1+m2+m3+m4 transform on the top four (k < 0), clamping negative
/// multiplicities to 0 (a negative multiplicity imposes no condition on a
/// system). Degree 0 with no points is the non-empty system of constants.
StandardFormResult to_standard_form(const SystemClass& system);

struct NegativePair {
    int i{0};  // 0-based indices into the reduced system's multiplicities
    int j{0};
    Int excess{0};  // t = m_i + m_j - d > 0, so L.line = -t
    bool speciality_inducing{false};  // excess >= 2
};

struct SpecialityReport {
    StandardFormResult standard_form;
    std::vector<NegativePair> negative_lines;
    std::vector<std::string> notes;
};

/// Reduces to standard form and lists every line through two of the points
/// meeting the system negatively. On a non-empty standard-form system no
/// other elementary class needs checking; pairs at excess >= 2 are the
/// speciality-inducing ones, excess 1 is surfaced but below that threshold.
SpecialityReport line_speciality_report(const SystemClass& system);

/// Minimum of intersect over all assignments of the system's points to the
/// curve's points. By the rearrangement inequality the minimum pairs the
/// sorted multiplicities, so both arguments are canonicalized and paired
/// index-by-index.
Int min_intersection(const SystemClass& system, const CurveClass& curve);

struct MtViolation {
    CurveClass curve;
    Int value{0};
};

struct TheoremMtReport {
    StandardFormResult standard_form;
    Int max_curve_degree{0};
    std::size_t curves_checked{0};
    std::vector<MtViolation> violations;  // non-line classes meeting the system negatively
    Int min_nonline_value{0};             // smallest minimized intersection over non-line classes
    Int line_min_value{0};                // the line's minimized intersection, for contrast
};

/// Checks that on the reduced system every elementary class up to
/// max_curve_degree other than the line has nonnegative minimized
/// intersection. A violation is a bug signal, never expected.
/// Throws std::invalid_argument when the system reduces to empty.
TheoremMtReport theorem_mt_check(const SystemClass& system, Int max_curve_degree);

/// The labeling of a standard-form system onto a certificate's point space
/// that keeps every decomposition term nonnegative: the top four
/// multiplicities go to the first step's base, the next two to the line's
/// points, the rest follow in index order. With no steps the multiplicities
/// are laid out in index order.
SystemClass decomposition_assignment(const SystemClass& standard,
                              std::span<const CremonaStep> certificate,
                              std::pair<int, int> line_points);

}  // namespace cremona
