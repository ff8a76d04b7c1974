#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cremona/classes.hpp"
#include "cremona/lattice.hpp"

namespace cremona {

/// A replayed certificate step violated its contract (non-positive or
/// mismatched increment).
struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A numeric fact the reduction relies on failed to hold. Signals a bug,
/// never a property of the input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

enum class Verdict { elementary, numerical_only, not_numerical };
enum class HaltReason { negative_entry, degree_dominated };
enum class FailedEquality { self_pairing, canonical_pairing };

const char* to_string(Verdict v);
const char* to_string(HaltReason h);
const char* to_string(FailedEquality f);

struct Classification {
    Verdict verdict{};
    // numerical_only: why the reduction stopped.
    std::optional<HaltReason> halt;
    // not_numerical: which equality failed.
    std::optional<FailedEquality> failed;
    // elementary: forward steps rebuilding the class from the line (1;1^2);
    // replay(certificate) normalizes to the input class.
    std::vector<CremonaStep> certificate;
    // Degree trajectory of the reduction, starting at the input degree.
    // Strictly decreasing and ending at 1 for elementary classes.
    std::vector<Int> degrees;
    // numerical_only: the (raw, positional) class at the halt.
    std::optional<CurveClass> halt_state;
};

struct NumericalCheck {
    bool ok{false};
    std::optional<FailedEquality> failed;
};

/// Checks the two (-1)-equalities <C,C> = -3 and <C,K> = 0.
NumericalCheck is_numerical(const CurveClass& c);

/// Degree-decreasing reduction toward the line. Deterministic: each step
/// transforms on the four largest multiplicities (ties to the lowest index).
Classification classify(const CurveClass& c);

/// Applies certificate steps forward starting from the line through points
/// {0,1}. Each step must reproduce its recorded increment, which must be
/// >= 1; otherwise throws CertificateError. Returns the raw positional class.
CurveClass replay(std::span<const CremonaStep> certificate);

/// Same, starting from the line through the two given points.
CurveClass replay_from(std::pair<int, int> line_points,
                       std::span<const CremonaStep> certificate);

struct IntersectionTerm {
    Int beta{0};     // the step's increment
    BaseQuad base{}; // its base quadruple
};

/// L.C written as sum beta_j * (2d - sum of the four base m's) plus the
/// tail (d - m_h - m_k) over the line's two points.
struct Decomposition {
    std::vector<IntersectionTerm> terms;
    std::pair<int, int> tail{};
    Int value{0};

    /// 2d - sum of m over the term's base (m zero-padded).
    Int term_value(const SystemClass& system, std::size_t j) const;
    /// d - m_h - m_k.
    Int tail_value(const SystemClass& system) const;
};

/// Evaluates the step-by-step decomposition of intersect(L, C) for the class
/// C built by the certificate from the line through line_points. The
/// certificate is validated by replaying it. The returned value equals
/// intersect(L, replay_from(line_points, certificate)) exactly.
Decomposition decompose_intersection(const SystemClass& system,
                                     std::span<const CremonaStep> certificate,
                                     std::pair<int, int> line_points);

}  // namespace cremona
