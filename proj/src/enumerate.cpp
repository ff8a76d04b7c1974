#include "cremona/enumerate.hpp"

#include <algorithm>
#include <cmath>

#include "cremona/lattice.hpp"
#include "cremona/parallel.hpp"
#include "cremona/speciality.hpp"

namespace cremona {

namespace {

Int isqrt(Int n) {
    if (n <= 0) return 0;
    Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while (r + 1 <= n / (r + 1)) ++r;
    return r;
}

// Backtracking over non-increasing parts >= 1 with target sum and target sum
// of squares. cap bounds the next part, slots the number still allowed
// (negative = unbounded). Parts are generated largest-first, so for a fixed
// degree the output is already in descending-lexicographic order.
void search_parts(Int sum, Int square_sum, Int cap, Int slots, std::vector<Int>& acc,
                  Int degree, std::vector<CurveClass>& out) {
    if (sum == 0) {
        if (square_sum == 0) out.push_back({degree, acc});
        return;
    }
    if (slots == 0) return;
    Int hi = std::min(cap, std::min(sum, isqrt(square_sum)));
    for (Int v = hi; v >= 1; --v) {
        const Int s = sum - v;
        const Int q = square_sum - v * v;
        if (q < s) continue;                   // remaining parts are >= 1, so sum(mu^2) >= sum(mu)
        if (q > checked_mul(s, v)) continue;   // remaining parts are <= v, so sum(mu^2) <= v*sum(mu)
        if (slots > 0 && s > checked_mul(slots - 1, v)) continue;  // not enough slots left
        acc.push_back(v);
        search_parts(s, q, v, slots > 0 ? slots - 1 : slots, acc, degree, out);
        acc.pop_back();
    }
}

std::vector<CurveClass> types_of_degree(Int degree, Int slots) {
    std::vector<CurveClass> out;
    std::vector<Int> acc;
    // <C,K> = 0 and <C,C> = -3 rewritten as the two sum targets.
    const Int sum = checked_mul(2, degree);
    const Int square_sum = checked_add(checked_mul(degree, degree), 3) / 2;
    search_parts(sum, square_sum, sum, slots, acc, degree, out);
    return out;
}

}  // namespace

std::vector<CurveClass> numerical_types(Int max_degree, std::optional<int> max_points) {
    if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
    const Int slots = max_points ? static_cast<Int>(*max_points) : -1;

    std::vector<Int> degrees;
    for (Int d = 1; d <= max_degree; d += 2) degrees.push_back(d);

    const auto per_degree = parallel_map<std::vector<CurveClass>>(
        degrees.size(),
        [&](std::size_t i) { return types_of_degree(degrees[i], slots); });

    std::vector<CurveClass> out;
    for (const auto& group : per_degree) out.insert(out.end(), group.begin(), group.end());
    return out;
}

std::vector<CensusRow> census(Int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
    std::vector<CensusRow> rows;
    const std::vector<CurveClass> types = numerical_types(max_degree);
    for (Int d = 1; d <= max_degree; d += 2) {
        CensusRow row;
        row.degree = d;
        for (const CurveClass& t : types) {
            if (t.degree != d) continue;
            Classification cls = classify(t);
            if (cls.verdict == Verdict::elementary) ++row.elementary;
            else ++row.numerical_only;
            row.types.emplace_back(t, std::move(cls));
        }
        row.numerical = row.types.size();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ScanEntry> conjecture_scan(Int max_degree) {
    std::vector<ScanEntry> out;
    for (const CurveClass& t : numerical_types(max_degree)) {
        if (is_line(t)) continue;
        const Int mu1 = t.mult.front();
        if (t.degree >= 2 * mu1) continue;

        ScanEntry entry;
        entry.cls = t;
        entry.boundary = t.degree == 2 * mu1 - 1;
        if (entry.boundary) {
            entry.planar_vdim = vdim_p2(project_from_point(t, 0));
            Int tail = 0, tail_sq = 0;
            for (std::size_t i = 1; i < t.mult.size(); ++i) {
                tail = checked_add(tail, t.mult[i]);
                tail_sq = checked_add(tail_sq, checked_mul(t.mult[i], t.mult[i]));
            }
            entry.tail_sum = tail;
            entry.tail_square_sum = tail_sq;
            entry.identities_hold = tail == 3 * mu1 - 2 && tail_sq == mu1 * mu1 - 2 * mu1 + 2;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<std::array<Int, 3>> planar_lemma_oracle() {
    std::vector<std::array<Int, 3>> out;
    for (Int m1 = 0; m1 <= 2; ++m1)
        for (Int m2 = 0; m2 <= m1; ++m2)
            for (Int m3 = 0; m3 <= m2; ++m3) {
                const Int spread = (m1 - m2) * (m1 - m2) + (m1 - m3) * (m1 - m3) +
                                   (m2 - m3) * (m2 - m3);
                if (spread + 5 * (m1 * m1 + m2 * m2 + m3 * m3) == 12)
                    out.push_back({m1, m2, m3});
            }
    return out;
}

}  // namespace cremona
