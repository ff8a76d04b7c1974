#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cremona/classes.hpp"
#include "cremona/classify.hpp"

namespace cremona {

/// All canonical curve classes with odd degree <= max_degree satisfying the
/// two (-1)-equalities, i.e. partitions mu_1 >= ... >= mu_r >= 1 with
/// sum mu_i = 2*delta and sum mu_i^2 = (delta^2+3)/2 (and r <= max_points
/// when given). Ordered by degree, then descending-lexicographic vectors.
std::vector<CurveClass> numerical_types(Int max_degree,
                                        std::optional<int> max_points = {});

struct CensusRow {
    Int degree{0};
    std::size_t numerical{0};
    std::size_t elementary{0};
    std::size_t numerical_only{0};
    std::vector<std::pair<CurveClass, Classification>> types;
};

/// One row per odd degree 1, 3, ..., max_degree with every numerical type
/// classified.
std::vector<CensusRow> census(Int max_degree);

/// A numerical type with delta < 2*mu_1 other than the line: a candidate
/// against the only-lines conjecture. On the delta = 2*mu_1 - 1 stratum the
/// planar projection data is attached; its virtual dimension is forced to -1
/// and the two tail identities below must hold.
struct ScanEntry {
    CurveClass cls;
    bool boundary{false};                // delta == 2*mu_1 - 1
    std::optional<Int> planar_vdim;      // vdim of the projection from the mu_1-point
    std::optional<Int> tail_sum;         // sum_{i>=2} mu_i   (expected 3*mu_1 - 2)
    std::optional<Int> tail_square_sum;  // sum_{i>=2} mu_i^2 (expected mu_1^2 - 2*mu_1 + 2)
    bool identities_hold{false};
};

std::vector<ScanEntry> conjecture_scan(Int max_degree);

/// Brute force over 0 <= mu_3 <= mu_2 <= mu_1 <= 2 of
/// sum_{i<j} (mu_i - mu_j)^2 + 5 * sum mu_i^2 = 12.
/// The only solution is (1, 1, 0).
std::vector<std::array<Int, 3>> planar_lemma_oracle();

}  // namespace cremona
