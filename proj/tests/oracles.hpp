#pragma once

// Independent brute-force oracles, deliberately naive so they share nothing
// with the pruned implementations they check.

#include <vector>

#include "cremona/classes.hpp"

namespace cremona::oracle {

// All non-increasing partitions of `sum` into parts <= cap.
inline void all_partitions(Int sum, Int cap, std::vector<Int>& acc,
                           std::vector<std::vector<Int>>& out) {
    if (sum == 0) {
        out.push_back(acc);
        return;
    }
    for (Int v = std::min(cap, sum); v >= 1; --v) {
        acc.push_back(v);
        all_partitions(sum - v, v, acc, out);
        acc.pop_back();
    }
}

// Numerical types of one odd degree: enumerate every partition of 2*degree,
// keep those whose squares add up to (degree^2+3)/2.
inline std::vector<CurveClass> numerical_types_of_degree(Int degree) {
    std::vector<std::vector<Int>> partitions;
    std::vector<Int> acc;
    all_partitions(2 * degree, 2 * degree, acc, partitions);

    std::vector<CurveClass> out;
    for (const std::vector<Int>& p : partitions) {
        Int squares = 0;
        for (Int v : p) squares += v * v;
        if (2 * squares == degree * degree + 3) out.push_back({degree, p});
    }
    return out;
}

inline std::vector<CurveClass> numerical_types(Int max_degree) {
    std::vector<CurveClass> out;
    for (Int d = 1; d <= max_degree; d += 2) {
        const auto group = numerical_types_of_degree(d);
        out.insert(out.end(), group.begin(), group.end());
    }
    return out;
}

}  // namespace cremona::oracle
