#include "cremona/speciality.hpp"

#include <algorithm>
#include <stdexcept>

#include "cremona/lattice.hpp"
#include "cremona/orbit.hpp"
#include "cremona/parallel.hpp"

namespace cremona {

namespace {

// C(n,2) and C(n,3), zero below the diagonal.
Int binom2(Int n) {
    if (n < 2) return 0;
    return checked_mul(n, n - 1) / 2;
}

Int binom3(Int n) {
    if (n < 3) return 0;
    return checked_mul(checked_mul(n, n - 1), n - 2) / 6;
}

}  // namespace

Int vdim_p2(Int d, std::span<const Int> mult) {
    Int v = checked_sub(binom2(checked_add(d, 2)), 1);
    for (Int m : mult) v = checked_sub(v, binom2(checked_add(m, 1)));
    return v;
}

Int vdim_p2(const PlanarType& p) { return vdim_p2(p.degree, p.mult); }

Int vdim_p3(const SystemClass& system) {
    Int v = checked_sub(binom3(checked_add(system.degree, 3)), 1);
    for (Int m : system.mult) v = checked_sub(v, binom3(checked_add(m, 2)));
    return v;
}

PlanarType project_from_point(const CurveClass& c, std::size_t i) {
    if (i >= c.mult.size()) throw std::out_of_range("projection point index out of range");
    PlanarType out;
    out.degree = checked_sub(c.degree, c.mult[i]);
    out.mult.reserve(c.mult.size() - 1);
    for (std::size_t j = 0; j < c.mult.size(); ++j)
        if (j != i) out.mult.push_back(c.mult[j]);
    return out;
}

StandardFormResult to_standard_form(const SystemClass& system) {
    if (system.degree < 0) throw std::invalid_argument("system degree must be >= 0");
    for (Int m : system.mult)
        if (m < 0) throw std::invalid_argument("system multiplicities must be >= 0");

    StandardFormResult result;
    SystemClass cur = normalize(system);
    for (;;) {
        const std::vector<Int> top = padded(cur.mult, 4);
        Int top_sum = 0;
        for (int i = 0; i < 4; ++i) top_sum = checked_add(top_sum, top[i]);
        if (checked_mul(2, cur.degree) >= top_sum) break;

        auto [next, step] = cremona_system({cur.degree, top}, {0, 1, 2, 3});
        for (Int& m : next.mult)
            if (m < 0) m = 0;  // a negative multiplicity imposes no condition
        result.steps.push_back(step);
        if (next.degree < 0) {
            result.empty = true;
            result.reduced = normalize(next);
            return result;
        }
        cur = normalize(next);
    }
    result.reduced = std::move(cur);
    return result;
}

SpecialityReport line_speciality_report(const SystemClass& system) {
    SpecialityReport report;
    report.standard_form = to_standard_form(system);
    const SystemClass& reduced = report.standard_form.reduced;

    if (!report.standard_form.steps.empty())
        report.notes.push_back("reduced to standard form in " +
                               std::to_string(report.standard_form.steps.size()) + " step(s)");
    if (report.standard_form.empty) {
        report.notes.push_back("system is empty: the degree fell below 0 during reduction");
        return report;
    }

    for (std::size_t i = 0; i < reduced.mult.size(); ++i) {
        for (std::size_t j = i + 1; j < reduced.mult.size(); ++j) {
            const Int value = checked_sub(reduced.degree,
                                          checked_add(reduced.mult[i], reduced.mult[j]));
            if (value >= 0) continue;
            report.negative_lines.push_back({static_cast<int>(i), static_cast<int>(j),
                                             -value, value <= -2});
        }
    }

    const Int vdim = vdim_p3(reduced);
    report.notes.push_back("virtual dimension of the reduced system: " + std::to_string(vdim));
    if (vdim < 0)
        report.notes.push_back(
            "negative virtual dimension suggests the system is empty; this is "
            "necessary-only evidence, and the verdict assumes non-emptiness");
    report.notes.push_back(
        "pairs at excess >= 2 induce speciality; excess 1 is negative but below "
        "that threshold");
    return report;
}

Int min_intersection(const SystemClass& system, const CurveClass& curve) {
    // dd' - sum(m_i * mu_i) is minimized over assignments by pairing the two
    // sorted sequences (rearrangement inequality), i.e. on canonical forms.
    return intersect(normalize(system), normalize(curve));
}

TheoremMtReport theorem_mt_check(const SystemClass& system, Int max_curve_degree) {
    TheoremMtReport report;
    report.standard_form = to_standard_form(system);
    report.max_curve_degree = max_curve_degree;
    if (report.standard_form.empty)
        throw std::invalid_argument("system reduces to the empty system");
    const SystemClass& reduced = report.standard_form.reduced;

    const std::vector<OrbitEntry> entries = generate_orbit(max_curve_degree);
    report.curves_checked = entries.size();

    struct PerCurve {
        Int value{0};
        bool line{false};
    };
    const auto per_curve = parallel_map<PerCurve>(entries.size(), [&](std::size_t i) {
        return PerCurve{min_intersection(reduced, entries[i].cls), is_line(entries[i].cls)};
    });

    bool first_nonline = true;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (per_curve[i].line) {
            report.line_min_value = per_curve[i].value;
            continue;
        }
        if (first_nonline || per_curve[i].value < report.min_nonline_value)
            report.min_nonline_value = per_curve[i].value;
        first_nonline = false;
        if (per_curve[i].value < 0)
            report.violations.push_back({entries[i].cls, per_curve[i].value});
    }
    return report;
}

SystemClass decomposition_assignment(const SystemClass& standard,
                              std::span<const CremonaStep> certificate,
                              std::pair<int, int> line_points) {
    const std::vector<Int> sorted = normalize(standard).mult;

    int space = std::max(line_points.first, line_points.second) + 1;
    for (const CremonaStep& step : certificate)
        for (int i : step.base) space = std::max(space, i + 1);

    // Assignment order: the first step's base, then the line's two points,
    // then everything else by index. Standard form then makes every
    // decomposition term nonnegative.
    std::vector<int> order;
    std::vector<bool> taken(static_cast<std::size_t>(space), false);
    const auto take = [&](int i) {
        if (!taken[i]) {
            taken[i] = true;
            order.push_back(i);
        }
    };
    if (!certificate.empty())
        for (int i : certificate.front().base) take(i);
    take(line_points.first);
    take(line_points.second);
    for (int i = 0; i < space; ++i) take(i);

    SystemClass out{standard.degree, std::vector<Int>(static_cast<std::size_t>(space), 0)};
    for (std::size_t rank = 0; rank < order.size() && rank < sorted.size(); ++rank)
        out.mult[order[rank]] = sorted[rank];
    return out;
}

}  // namespace cremona
