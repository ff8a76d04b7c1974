#include "cremona/orbit.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "cremona/classify.hpp"
#include "cremona/enumerate.hpp"
#include "cremona/lattice.hpp"

namespace cremona {

namespace {

struct Node {
    CurveClass raw;  // positional state reached by replaying the witness
    std::vector<CremonaStep> witness;
};

// Distinct multiplicity values of the padded vector with their counts,
// descending. All index choices realizing the same value multiset give the
// same canonical image, so branching happens over value multisets only.
std::vector<std::pair<Int, int>> value_counts(const std::vector<Int>& padded_mult) {
    std::vector<Int> sorted = padded_mult;
    std::sort(sorted.begin(), sorted.end(), std::greater<Int>());
    std::vector<std::pair<Int, int>> out;
    for (Int v : sorted) {
        if (!out.empty() && out.back().first == v) ++out.back().second;
        else out.emplace_back(v, 1);
    }
    return out;
}

// All multisets of four values drawn from the counted values.
void pick_values(const std::vector<std::pair<Int, int>>& values, std::size_t from,
                 std::vector<Int>& chosen, std::vector<std::vector<Int>>& out) {
    if (chosen.size() == 4) {
        out.push_back(chosen);
        return;
    }
    if (from >= values.size()) return;
    const auto [v, count] = values[from];
    const int want = static_cast<int>(4 - chosen.size());
    for (int take = std::min(count, want); take >= 0; --take) {
        chosen.insert(chosen.end(), take, v);
        pick_values(values, from + 1, chosen, out);
        chosen.resize(chosen.size() - take);
    }
}

// First indices of the padded vector realizing the chosen value multiset.
BaseQuad realize_indices(const std::vector<Int>& padded_mult, const std::vector<Int>& values) {
    BaseQuad base{};
    std::size_t filled = 0;
    std::vector<bool> used(padded_mult.size(), false);
    for (Int v : values) {
        for (std::size_t i = 0; i < padded_mult.size(); ++i) {
            if (used[i] || padded_mult[i] != v) continue;
            used[i] = true;
            base[filled++] = static_cast<int>(i);
            break;
        }
    }
    std::sort(base.begin(), base.end());
    return base;
}

}  // namespace

std::vector<OrbitEntry> generate_orbit(Int max_degree, int max_points) {
    if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
    if (max_points < 0) {
        const Int lossless = checked_mul(2, max_degree);  // r <= 2*delta for every entry
        max_points = lossless > 1000000 ? 1000000 : static_cast<int>(lossless);
    }
    if (max_points < 2) throw std::invalid_argument("max_points must be >= 2");

    std::map<CurveClass, OrbitEntry, TypeOrder> found;
    std::deque<Node> frontier;

    const CurveClass line{1, {1, 1}};
    found.emplace(line, OrbitEntry{line, {}, 0});
    frontier.push_back({line, {}});

    while (!frontier.empty()) {
        Node node = std::move(frontier.front());
        frontier.pop_front();

        const std::vector<Int> state = padded(node.raw.mult, static_cast<std::size_t>(max_points));
        const auto values = value_counts(state);
        std::vector<std::vector<Int>> choices;
        std::vector<Int> chosen;
        pick_values(values, 0, chosen, choices);

        for (const std::vector<Int>& choice : choices) {
            Int choice_sum = 0;
            for (Int v : choice) choice_sum = checked_add(choice_sum, v);
            const Int gamma = checked_sub(node.raw.degree, choice_sum);
            if (gamma < 1) continue;
            const Int new_degree = checked_add(node.raw.degree, checked_mul(2, gamma));
            if (new_degree > max_degree) continue;

            const BaseQuad base = realize_indices(state, choice);
            auto [next, step] = cremona_curve({node.raw.degree, state}, base);
            const CurveClass canonical = normalize(next);
            if (found.contains(canonical)) continue;

            std::vector<CremonaStep> witness = node.witness;
            witness.push_back(step);
            found.emplace(canonical, OrbitEntry{canonical, witness, witness.size()});
            frontier.push_back({std::move(next), std::move(witness)});
        }
    }

    std::vector<OrbitEntry> out;
    out.reserve(found.size());
    for (auto& [cls, entry] : found) out.push_back(std::move(entry));
    return out;
}

CrossValidation cross_validate(Int max_degree, int max_points) {
    CrossValidation report;

    std::set<CurveClass, TypeOrder> orbit_set;
    for (const OrbitEntry& e : generate_orbit(max_degree, max_points)) orbit_set.insert(e.cls);

    std::set<CurveClass, TypeOrder> elementary_set;
    for (const CurveClass& t : numerical_types(max_degree))
        if (classify(t).verdict == Verdict::elementary) elementary_set.insert(t);

    for (Int d = 1; d <= max_degree; d += 2) {
        CrossValidation::PerDegree row{d, 0, 0};
        for (const CurveClass& c : orbit_set) row.orbit_count += c.degree == d;
        for (const CurveClass& c : elementary_set) row.elementary_count += c.degree == d;
        report.per_degree.push_back(row);
    }
    std::set_difference(orbit_set.begin(), orbit_set.end(), elementary_set.begin(),
                        elementary_set.end(), std::back_inserter(report.only_in_orbit),
                        TypeOrder{});
    std::set_difference(elementary_set.begin(), elementary_set.end(), orbit_set.begin(),
                        orbit_set.end(), std::back_inserter(report.only_in_enumeration),
                        TypeOrder{});
    report.equal = report.only_in_orbit.empty() && report.only_in_enumeration.empty();
    return report;
}

}  // namespace cremona
