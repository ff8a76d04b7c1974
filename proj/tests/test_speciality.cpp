#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "cremona/enumerate.hpp"
#include "cremona/lattice.hpp"
#include "cremona/orbit.hpp"
#include "cremona/speciality.hpp"
#include "cremona/typeexpr.hpp"

using namespace cremona;

namespace {

CurveClass curve(std::string_view text) { return parse_curve(text); }
SystemClass system_of(std::string_view text) { return parse_system(text); }

// Replay of a standard-form reduction: each recorded step acts on the
// descending-sorted state, negatives clamp to zero.
SystemClass replay_reduction(const SystemClass& input, const StandardFormResult& r) {
    SystemClass state = normalize(input);
    for (const CremonaStep& step : r.steps) {
        auto [next, applied] = cremona_system({state.degree, padded(state.mult, 4)}, step.base);
        REQUIRE(applied.increment == step.increment);
        for (Int& m : next.mult)
            if (m < 0) m = 0;
        state = normalize(next);
    }
    return state;
}

}  // namespace

TEST_CASE("virtual dimensions") {
    const std::vector<Int> ten_ones(10, 1);
    CHECK(vdim_p2(3, ten_ones) == -1);
    CHECK(vdim_p2(5, {}) == 20);  // C(7,2) - 1
    CHECK(vdim_p2(4, std::vector<Int>{2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1}) == -1);

    CHECK(vdim_p3(system_of("1;1,1")) == 1);
    CHECK(vdim_p3(system_of("4;")) == 34);  // C(7,3) - 1
    CHECK(vdim_p3(system_of("2;1^9")) == 0);
}

TEST_CASE("projection from a point") {
    const PlanarType p = project_from_point(curve("13;6,4^2,3,1^9"), 0);
    CHECK(p.degree == 7);
    CHECK(p.mult == std::vector<Int>{4, 4, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1});

    const PlanarType collapsed = project_from_point(curve("1;1,1"), 0);
    CHECK(collapsed.degree == 0);
    CHECK(collapsed.mult == std::vector<Int>{1});

    const PlanarType g = project_from_point(curve("7;4,1^10"), 0);
    CHECK(g.degree == 3);
    CHECK(g.mult == std::vector<Int>(10, 1));
    CHECK(vdim_p2(g) == -1);

    CHECK_THROWS_AS(project_from_point(curve("1;1,1"), 2), std::out_of_range);
}

TEST_CASE("standard form reduction") {
    SUBCASE("one step to the constants-free pencil") {
        const StandardFormResult r = to_standard_form(system_of("3;2,2,2,2"));
        CHECK_FALSE(r.empty);
        CHECK(r.reduced == system_of("1;"));
        REQUIRE(r.steps.size() == 1);
        CHECK(r.steps[0].increment == -2);
    }
    SUBCASE("already standard") {
        const StandardFormResult r = to_standard_form(system_of("4;1^6"));
        CHECK_FALSE(r.empty);
        CHECK(r.steps.empty());
        CHECK(r.reduced == system_of("4;1^6"));
    }
    SUBCASE("degree zero means the constants") {
        const StandardFormResult r = to_standard_form(system_of("2;2,2,1,1"));
        CHECK_FALSE(r.empty);
        CHECK(r.reduced == system_of("0;"));
        REQUIRE(r.steps.size() == 1);
        CHECK(r.steps[0].increment == -2);
    }
    SUBCASE("degree below zero is empty") {
        const StandardFormResult r = to_standard_form(system_of("1;1,1,1,1"));
        CHECK(r.empty);
        CHECK(r.reduced.degree < 0);
    }
    SUBCASE("unsorted input is sorted first") {
        const StandardFormResult r = to_standard_form(system_of("4;1,3,0,3,1,1,1"));
        CHECK(r.reduced == normalize(system_of("4;3,3,1,1,1,1")));
    }
    SUBCASE("rejects negative input") {
        CHECK_THROWS_AS(to_standard_form(system_of("-1;1")), std::invalid_argument);
        CHECK_THROWS_AS(to_standard_form(system_of("3;-1,1")), std::invalid_argument);
    }
}

TEST_CASE("standard form is idempotent, monotone, and replayable") {
    std::mt19937_64 gen{4242};
    std::uniform_int_distribution<Int> deg(0, 24);
    std::uniform_int_distribution<int> len(0, 12);
    for (int trial = 0; trial < 400; ++trial) {
        SystemClass sys{deg(gen), {}};
        sys.mult.resize(len(gen));
        for (Int& m : sys.mult)
            m = std::uniform_int_distribution<Int>(0, std::max<Int>(1, sys.degree))(gen);

        const StandardFormResult r = to_standard_form(sys);
        CHECK(r.steps.size() <= static_cast<std::size_t>(std::max<Int>(1, sys.degree)));
        for (const CremonaStep& s : r.steps) CHECK(s.increment < 0);

        CHECK(replay_reduction(sys, r) == r.reduced);

        if (!r.empty) {
            const std::vector<Int> top = padded(r.reduced.mult, 4);
            CHECK(2 * r.reduced.degree >= top[0] + top[1] + top[2] + top[3]);
            const StandardFormResult again = to_standard_form(r.reduced);
            CHECK(again.steps.empty());
            CHECK(again.reduced == r.reduced);
        }
    }
}

TEST_CASE("line speciality report") {
    SUBCASE("speciality-inducing pair") {
        const SpecialityReport r = line_speciality_report(system_of("4;3,3,1^4"));
        CHECK_FALSE(r.standard_form.empty);
        REQUIRE(r.negative_lines.size() == 1);
        CHECK(r.negative_lines[0].i == 0);
        CHECK(r.negative_lines[0].j == 1);
        CHECK(r.negative_lines[0].excess == 2);
        CHECK(r.negative_lines[0].speciality_inducing);
    }
    SUBCASE("no negative pairs") {
        const SpecialityReport r = line_speciality_report(system_of("4;1^6"));
        CHECK(r.negative_lines.empty());
    }
    SUBCASE("excess one is listed but below the threshold") {
        const SpecialityReport r = line_speciality_report(system_of("5;3,3,3,1"));
        CHECK(r.standard_form.steps.empty());  // 10 >= 10
        REQUIRE(r.negative_lines.size() == 3);
        for (const NegativePair& p : r.negative_lines) {
            CHECK(p.excess == 1);
            CHECK_FALSE(p.speciality_inducing);
        }
    }
    SUBCASE("empty system short-circuits") {
        const SpecialityReport r = line_speciality_report(system_of("1;1,1,1,1"));
        CHECK(r.standard_form.empty);
        CHECK(r.negative_lines.empty());
    }
}

TEST_CASE("minimized intersection is the sorted pairing") {
    // brute force over all assignments on small cases
    std::mt19937_64 gen{77};
    std::uniform_int_distribution<Int> deg(0, 9);
    std::uniform_int_distribution<Int> entry(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        SystemClass sys{deg(gen), std::vector<Int>(6)};
        CurveClass c{deg(gen), std::vector<Int>(6)};
        for (Int& m : sys.mult) m = entry(gen);
        for (Int& m : c.mult) m = entry(gen);

        std::vector<int> perm(6);
        std::iota(perm.begin(), perm.end(), 0);
        Int brute = std::numeric_limits<Int>::max();
        do {
            Int v = sys.degree * c.degree;
            for (int i = 0; i < 6; ++i) v -= sys.mult[i] * c.mult[perm[i]];
            brute = std::min(brute, v);
        } while (std::next_permutation(perm.begin(), perm.end()));

        CHECK(min_intersection(sys, c) == brute);
    }
}

TEST_CASE("theorem check on worked systems") {
    const TheoremMtReport r = theorem_mt_check(system_of("4;1^6"), 7);
    CHECK(r.violations.empty());
    CHECK(r.curves_checked == 6);  // orbit entries through degree 7
    CHECK(r.min_nonline_value >= 0);

    const TheoremMtReport contrast = theorem_mt_check(system_of("4;3,3,1^4"), 7);
    CHECK(contrast.violations.empty());
    CHECK(contrast.line_min_value == -2);   // only the line goes negative
    CHECK(contrast.min_nonline_value == 2); // the cubic against 3,3,1,1,1,1

    const TheoremMtReport pencil = theorem_mt_check(system_of("1;1,1"), 7);
    CHECK(pencil.violations.empty());
    CHECK(pencil.min_nonline_value >= 0);

    CHECK_THROWS_AS(theorem_mt_check(system_of("1;1,1,1,1"), 5), std::invalid_argument);
}

TEST_CASE("boundary-stratum identities from the scan side") {
    for (const CurveClass& t : numerical_types(13)) {
        if (is_line(t)) continue;
        const Int mu1 = t.mult.front();
        if (t.degree != 2 * mu1 - 1) continue;
        CHECK(vdim_p2(project_from_point(t, 0)) == -1);
        Int tail = 0, tail_sq = 0;
        for (std::size_t i = 1; i < t.mult.size(); ++i) {
            tail += t.mult[i];
            tail_sq += t.mult[i] * t.mult[i];
        }
        CHECK(tail == 3 * mu1 - 2);
        CHECK(tail_sq == mu1 * mu1 - 2 * mu1 + 2);
    }
}

TEST_CASE("decomposition terms are nonnegative on standard systems") {
    std::mt19937_64 gen{555};
    std::uniform_int_distribution<Int> deg(1, 22);
    std::uniform_int_distribution<int> len(0, 12);

    const std::vector<OrbitEntry> entries = generate_orbit(9);

    int checked = 0;
    while (checked < 100) {
        SystemClass raw{deg(gen), {}};
        raw.mult.resize(len(gen));
        for (Int& m : raw.mult)
            m = std::uniform_int_distribution<Int>(0, raw.degree)(gen);
        const StandardFormResult sf = to_standard_form(raw);
        if (sf.empty) continue;
        ++checked;

        for (const OrbitEntry& e : entries) {
            if (is_line(e.cls)) continue;
            const SystemClass assigned = decomposition_assignment(sf.reduced, e.witness, {0, 1});
            const Decomposition d = decompose_intersection(assigned, e.witness, {0, 1});
            CHECK(d.tail_value(assigned) >= 0);
            for (std::size_t j = 0; j < d.terms.size(); ++j)
                CHECK(d.term_value(assigned, j) >= 0);
            CHECK(d.value == intersect(assigned, replay(e.witness)));
            CHECK(d.value >= min_intersection(sf.reduced, e.cls));
        }
    }
}
