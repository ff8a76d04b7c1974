#pragma once

#include <cstddef>
#include <vector>

#include "cremona/classes.hpp"

namespace cremona {

/// One class in the forward orbit of the line, with a replayable witness.
struct OrbitEntry {
    CurveClass cls;                    // canonical form
    std::vector<CremonaStep> witness;  // forward build from (1;1^2), every step has gamma >= 1
    std::size_t depth{0};              // witness length; minimal among discovered paths
};

/// Breadth-first closure of (1;1^2) under degree-increasing transformations:
/// expand each frontier class on every multiset choice of four multiplicities
/// (zeros included, up to max_points points), keep images with gamma >= 1 and
/// degree <= max_degree, dedup by canonical form keeping the shallowest
/// witness. max_points < 0 means the lossless default 2*max_degree.
/// Entries come back in listing order (degree, then descending-lex).
std::vector<OrbitEntry> generate_orbit(Int max_degree, int max_points = -1);

struct CrossValidation {
    bool equal{false};
    struct PerDegree {
        Int degree{0};
        std::size_t orbit_count{0};
        std::size_t elementary_count{0};
    };
    std::vector<PerDegree> per_degree;
    std::vector<CurveClass> only_in_orbit;
    std::vector<CurveClass> only_in_enumeration;
};

/// Compares the forward-generated orbit against the classify-elementary
/// subset of the enumerated numerical types. Any discrepancy is a fatal
/// finding (a bug, or a mathematical surprise worth a second look).
CrossValidation cross_validate(Int max_degree, int max_points = -1);

}  // namespace cremona
