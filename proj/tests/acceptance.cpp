// Acceptance suite: runs every criterion at its stated tolerance (zero — all
// statements are exact integer facts) and prints one pass/fail line each.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "cremona/classify.hpp"
#include "cremona/enumerate.hpp"
#include "cremona/fixtures.hpp"
#include "cremona/lattice.hpp"
#include "cremona/orbit.hpp"
#include "cremona/speciality.hpp"
#include "cremona/typeexpr.hpp"
#include "oracles.hpp"

using namespace cremona;

namespace {

struct Checker {
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    Int value(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(gen); }

    std::vector<Int> mults(std::size_t max_len, Int lo, Int hi) {
        std::vector<Int> out(value(0, static_cast<Int>(max_len)));
        for (Int& m : out) m = value(lo, hi);
        return out;
    }

    BaseQuad base(int space) {
        std::vector<int> idx(space);
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), gen);
        BaseQuad b{idx[0], idx[1], idx[2], idx[3]};
        std::sort(b.begin(), b.end());
        return b;
    }
};

// ------------------------------------------------------------ criterion 1

void invariance_suite(Checker& c) {
    Rng rng(1001);
    const CurveClass k16 = canonical_k(16);
    for (int trial = 0; trial < 1000; ++trial) {
        const CurveClass c1{rng.value(-30, 30), rng.mults(12, -9, 9)};
        const CurveClass c2{rng.value(-30, 30), rng.mults(12, -9, 9)};
        const SystemClass sys{rng.value(-30, 30), rng.mults(12, -9, 9)};
        const BaseQuad base = rng.base(14);

        const auto [c1t, s1] = cremona_curve(c1, base);
        const auto [c2t, s2] = cremona_curve(c2, base);
        const auto [syst, sk] = cremona_system(sys, base);

        c.require(pairing(c1t, c2t) == pairing(c1, c2), "pairing not preserved");
        c.require(pairing(c1t, k16) == pairing(c1, k16), "pairing with K not preserved");
        c.require(intersect(syst, c1t) == intersect(sys, c1),
                  "intersection not preserved");
        c.require(same_class(cremona_curve(c1t, base).first, c1),
                  "double curve application is not the identity");
        c.require(same_class(cremona_system(syst, base).first, sys),
                  "double system application is not the identity");

        const auto [kimg, kstep] = cremona_curve(k16, rng.base(16));
        c.require(kstep.increment == 0 && same_class(kimg, k16), "K is not fixed");
    }
}

// ------------------------------------------------------------ criterion 3

void small_census(Checker& c) {
    // regenerate through the naive oracle first
    const std::vector<CurveClass> reference = oracle::numerical_types(7);
    std::vector<CurveClass> mine = numerical_types(7);
    {
        std::vector<CurveClass> a = reference, b = mine;
        std::sort(a.begin(), a.end(), TypeOrder{});
        std::sort(b.begin(), b.end(), TypeOrder{});
        c.require(a == b, "pruned enumeration disagrees with the naive oracle");
    }

    const std::vector<CensusRow> rows = census(7);
    c.require(rows.size() == 4, "expected 4 census rows");
    const std::size_t expected_numerical[] = {1, 1, 1, 4};
    const std::size_t expected_only[] = {0, 0, 0, 1};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        c.require(rows[i].numerical == expected_numerical[i],
                  "numerical count wrong at degree " + std::to_string(rows[i].degree));
        c.require(rows[i].numerical_only == expected_only[i],
                  "numerical-only count wrong at degree " + std::to_string(rows[i].degree));
    }
    for (const auto& [t, cls] : rows[3].types)
        if (cls.verdict == Verdict::numerical_only)
            c.require(t == parse_curve("7;4,1^10"),
                      "the degree-7 numerical-only type is not (7;4,1^10)");
}

// ------------------------------------------------------------ criterion 5

void example_one(Checker& c) {
    const Classification r = classify(parse_curve("13;6,4^2,3,1^9"));
    c.require(r.verdict == Verdict::numerical_only, "verdict is not numerical-only");
    c.require(r.halt == HaltReason::negative_entry, "halt reason is not negative-entry");
    c.require(r.halt_state && *r.halt_state == parse_curve("5;2,0,0,-1,1^9"),
              "first-step image is not (5;2,0^2,-1,1^9)");

    const PlanarType p = project_from_point(parse_curve("13;6,4^2,3,1^9"), 0);
    c.require(p.degree == 7 && p.mult == parse_curve("7;4,4,3,1^9").mult,
              "projection from the 6-fold point is not (7;4^2,3,1^9)");

    // the degree-7-vs-5 inconsistency must be flagged on the fixture
    bool annotated = false;
    for (const Fixture& f : paper_fixtures())
        if (f.name == "classify/deg13-reducible-type")
            annotated = f.annotation.find("degree 7") != std::string::npos &&
                        f.annotation.find("degree 5") != std::string::npos;
    c.require(annotated, "fixture annotation does not flag the printed degree 7");
}

// ------------------------------------------------------------ criterion 8

void theorem_mt_property(Checker& c) {
    Rng rng(8008);
    const std::vector<OrbitEntry> entries = generate_orbit(11);

    int checked = 0;
    while (checked < 200) {
        SystemClass raw{rng.value(1, 25), {}};
        raw.mult.resize(static_cast<std::size_t>(rng.value(0, 14)));
        for (Int& m : raw.mult) m = rng.value(0, raw.degree);
        const StandardFormResult sf = to_standard_form(raw);
        if (sf.empty) continue;
        ++checked;

        for (const OrbitEntry& e : entries) {
            if (is_line(e.cls)) continue;
            const Int minimized = min_intersection(sf.reduced, e.cls);
            c.require(minimized >= 0, "negative minimized intersection for " + render(e.cls) +
                                          " against " + render(sf.reduced));

            const SystemClass assigned = decomposition_assignment(sf.reduced, e.witness, {0, 1});
            const Decomposition d = decompose_intersection(assigned, e.witness, {0, 1});
            c.require(d.tail_value(assigned) >= 0, "negative tail term");
            for (std::size_t j = 0; j < d.terms.size(); ++j)
                c.require(d.term_value(assigned, j) >= 0, "negative step term");
            c.require(d.value == intersect(assigned, replay(e.witness)),
                      "decomposition sum differs from the direct intersection");
        }
    }
}

// ------------------------------------------------------------ criterion 9

void orbit_structure(Checker& c) {
    for (const OrbitEntry& e : generate_orbit(13)) {
        c.require(e.cls.degree % 2 == 1, "even degree in the orbit");
        if (!is_line(e.cls)) {
            c.require(e.cls.degree > 2 * e.cls.mult.front(),
                      "orbit entry with degree <= 2*mu1: " + render(e.cls));
            const std::vector<Int> top = padded(e.cls.mult, 4);
            c.require(e.cls.degree < top[0] + top[1] + top[2] + top[3],
                      "degree not below the top-four sum: " + render(e.cls));
        }
        const QuadricClass q = to_quadric(e.cls);
        c.require(quadric_pair(q, q) == -2, "quadric self-intersection is not -2");
        c.require(q.a - q.b == 1, "bidegree difference is not 1");
    }

    Rng rng(909);
    for (int trial = 0; trial < 500; ++trial) {
        const QuadricClass q1{rng.value(-20, 20), rng.value(-20, 20), rng.mults(10, -9, 9)};
        const QuadricClass q2{rng.value(-20, 20), rng.value(-20, 20), rng.mults(10, -9, 9)};
        const BaseQuad base = rng.base(12);
        c.require(quadric_pair(cremona_quadric(q1, base), cremona_quadric(q2, base)) ==
                      quadric_pair(q1, q2),
                  "quadric pairing not preserved");
    }
}

// ------------------------------------------------------------ criterion 10

void scan_at_nine(Checker& c) {
    const std::vector<ScanEntry> entries = conjecture_scan(9);
    c.require(entries.size() == 2, "expected exactly two scan entries");
    if (entries.size() == 2) {
        c.require(entries[0].cls == parse_curve("7;4,1^10"), "first entry wrong");
        c.require(entries[1].cls == parse_curve("9;5,2^2,1^9"), "second entry wrong");
        for (const ScanEntry& e : entries) {
            c.require(e.boundary, "entry off the boundary stratum");
            c.require(e.planar_vdim == -1, "planar virtual dimension is not -1");
            c.require(e.identities_hold, "tail identities fail");
        }
    }
    // regenerate the candidate set through the naive oracle
    std::set<CurveClass, TypeOrder> reference;
    for (const CurveClass& raw : oracle::numerical_types(9)) {
        const CurveClass t = normalize(raw);
        if (!is_line(t) && t.degree < 2 * t.mult.front()) reference.insert(t);
    }
    std::set<CurveClass, TypeOrder> mine;
    for (const ScanEntry& e : entries) mine.insert(e.cls);
    c.require(reference == mine, "scan set disagrees with the naive oracle");
}

// ------------------------------------------------------------ harness

struct Criterion {
    int id;
    std::string summary;
    double time_limit_s;  // 0 = no limit
    std::function<void(Checker&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "invariance suite: 1000 randomized matched-action cases", 5.0, invariance_suite},
        {2, "line invariants: <line,line> = -3 and <line,K> = 0", 0.0,
         [](Checker& c) {
             const CurveClass line = parse_curve("1;1,1");
             c.require(pairing(line, line) == -3, "<line,line> != -3");
             c.require(pairing(line, canonical_k(2)) == 0, "<line,K> != 0");
         }},
        {3, "census through degree 7 against the naive oracle", 1.0, small_census},
        {4, "orbit equals classify-elementary enumeration at degree 13", 60.0,
         [](Checker& c) {
             const CrossValidation r = cross_validate(13);
             c.require(r.equal, "orbit and enumeration disagree");
             c.require(!r.per_degree.empty() && r.per_degree.front().orbit_count == 1,
                       "degree-1 row is not the lone line");
         }},
        {5, "worked degree-13 type: halt image, projection, and annotation", 0.0,
         example_one},
        {6, "worked degree-7 type: degree-dominated halt and empty planar system", 0.0,
         [](Checker& c) {
             const Classification r = classify(parse_curve("7;4,1^10"));
             c.require(r.verdict == Verdict::numerical_only &&
                           r.halt == HaltReason::degree_dominated,
                       "classification is not degree-dominated");
             const std::vector<Int> ten_ones(10, 1);
             c.require(vdim_p2(3, ten_ones) == -1, "vdim of (3;1^10) is not -1");
         }},
        {7, "planar lemma brute force returns exactly (1,1,0)", 0.0,
         [](Checker& c) {
             const auto sols = planar_lemma_oracle();
             c.require(sols.size() == 1 && sols[0] == std::array<Int, 3>{1, 1, 0},
                       "solution set is not {(1,1,0)}");
         }},
        {8, "200 standard-form systems vs elementary classes through degree 11", 60.0,
         theorem_mt_property},
        {9, "orbit structure through degree 13 and quadric-pairing preservation", 0.0,
         orbit_structure},
        {10, "conjecture scan at degree 9 matches the oracle with vdim -1", 0.0,
         scan_at_nine},
    };

    int failed = 0;
    for (const Criterion& criterion : criteria) {
        Checker checker;
        const auto start = std::chrono::steady_clock::now();
        criterion.body(checker);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.time_limit_s > 0 && elapsed > criterion.time_limit_s)
            checker.failures.push_back("time limit exceeded: " + std::to_string(elapsed) +
                                       " s > " + std::to_string(criterion.time_limit_s) + " s");

        std::ostringstream line;
        line << (checker.failures.empty() ? "PASS" : "FAIL") << " criterion " << criterion.id
             << ": " << criterion.summary;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << " (" << elapsed << " s)";
        if (!checker.failures.empty()) {
            line << " — " << checker.failures.size() << " failure(s), first: "
                 << checker.failures.front();
            ++failed;
        }
        std::cout << line.str() << '\n';
    }
    std::cout << (failed == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << '\n';
    return failed == 0 ? 0 : 1;
}
