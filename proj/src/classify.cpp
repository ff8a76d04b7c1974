#include "cremona/classify.hpp"

#include <algorithm>
#include <numeric>

namespace cremona {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::elementary: return "elementary";
        case Verdict::numerical_only: return "numerical-only";
        case Verdict::not_numerical: return "not-numerical";
    }
    return "?";
}

const char* to_string(HaltReason h) {
    switch (h) {
        case HaltReason::negative_entry: return "negative-entry";
        case HaltReason::degree_dominated: return "degree-dominated";
    }
    return "?";
}

const char* to_string(FailedEquality f) {
    switch (f) {
        case FailedEquality::self_pairing: return "self-pairing";
        case FailedEquality::canonical_pairing: return "canonical-pairing";
    }
    return "?";
}

NumericalCheck is_numerical(const CurveClass& c) {
    if (pairing(c, c) != -3) return {false, FailedEquality::self_pairing};
    if (pairing(c, canonical_k(c.mult.size())) != 0)
        return {false, FailedEquality::canonical_pairing};
    return {true, {}};
}

namespace {

bool has_negative_entry(const CurveClass& c) {
    if (c.degree < 0) return true;
    return std::any_of(c.mult.begin(), c.mult.end(), [](Int m) { return m < 0; });
}

// Indices of the four largest multiplicities, ties broken by lowest index.
BaseQuad top_four_indices(const std::vector<Int>& mult) {
    std::vector<int> idx(mult.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return mult[a] > mult[b]; });
    BaseQuad base{idx[0], idx[1], idx[2], idx[3]};
    std::sort(base.begin(), base.end());
    return base;
}

// Relabeling that moves the reduction's final line points p < q onto {0,1}:
// the transposition p<->0 followed by q<->1. Since q > p >= 0 the first swap
// never moves the second unit.
struct Relabel {
    int p, q;

    int operator()(int i) const {
        int j = i;
        if (j == p) j = 0;
        else if (j == 0) j = p;
        if (j == q) j = 1;
        else if (j == 1) j = q;
        return j;
    }
};

}  // namespace

Classification classify(const CurveClass& input) {
    Classification result;
    CurveClass state = normalize(input);

    const NumericalCheck check = is_numerical(state);
    if (!check.ok) {
        result.verdict = Verdict::not_numerical;
        result.failed = check.failed;
        return result;
    }

    result.degrees.push_back(state.degree);

    // A class with negative entries can satisfy both equalities (e.g.
    // (-1;-1,-1)) but is outside the reduction's territory; the loop's
    // assertions are theorems only for nonnegative vectors.
    if (has_negative_entry(state)) {
        result.verdict = Verdict::numerical_only;
        result.halt = HaltReason::negative_entry;
        result.halt_state = state;
        return result;
    }

    std::vector<CremonaStep> reduction;
    for (;;) {
        if (is_line(state)) break;

        const Int mu1 = *std::max_element(state.mult.begin(), state.mult.end());
        if (state.degree < 2 * mu1) {
            result.verdict = Verdict::numerical_only;
            result.halt = HaltReason::degree_dominated;
            result.halt_state = state;
            return result;
        }
        if (state.degree % 2 == 0)
            throw InternalError("even degree reached on a numerical class");

        state.mult = padded(state.mult, 4);
        const BaseQuad base = top_four_indices(state.mult);
        Int top_sum = 0;
        for (int i : base) top_sum = checked_add(top_sum, state.mult[i]);
        // delta < sum of the four largest multiplicities: guaranteed for any
        // nonnegative numerical class with delta > 2*mu1.
        if (state.degree >= top_sum)
            throw InternalError("degree not dominated by the top four multiplicities");

        auto [next, step] = cremona_curve(state, base);
        result.degrees.push_back(next.degree);
        if (has_negative_entry(next)) {
            result.verdict = Verdict::numerical_only;
            result.halt = HaltReason::negative_entry;
            result.halt_state = next;
            return result;
        }
        if (next.degree >= state.degree)
            throw InternalError("degree failed to decrease");
        reduction.push_back(step);
        state = std::move(next);
    }

    // The line's two unit entries sit at positions p < q of the working
    // vector; relabel so the certificate replays from the line at {0,1}.
    int p = -1, q = -1;
    for (std::size_t i = 0; i < state.mult.size(); ++i) {
        if (state.mult[i] == 0) continue;
        if (p < 0) p = static_cast<int>(i);
        else q = static_cast<int>(i);
    }
    const Relabel relabel{p, q};

    result.verdict = Verdict::elementary;
    result.certificate.reserve(reduction.size());
    for (auto it = reduction.rbegin(); it != reduction.rend(); ++it) {
        BaseQuad base;
        for (int i = 0; i < 4; ++i) base[i] = relabel(it->base[i]);
        std::sort(base.begin(), base.end());
        result.certificate.push_back({base, checked_sub(0, it->increment)});
    }
    return result;
}

CurveClass replay_from(std::pair<int, int> line_points,
                       std::span<const CremonaStep> certificate) {
    const auto [h, k] = line_points;
    if (h < 0 || k < 0 || h == k)
        throw CertificateError("line points must be two distinct indices");
    CurveClass state{1, padded({}, static_cast<std::size_t>(std::max(h, k)) + 1)};
    state.mult[h] = 1;
    state.mult[k] = 1;
    for (const CremonaStep& step : certificate) {
        auto [next, applied] = cremona_curve(state, step.base);
        if (applied.increment < 1)
            throw CertificateError("certificate step has increment " +
                                   std::to_string(applied.increment) +
                                   " on replay; expected >= 1");
        if (applied.increment != step.increment)
            throw CertificateError("certificate step increment mismatch: recorded " +
                                   std::to_string(step.increment) + ", replay gives " +
                                   std::to_string(applied.increment));
        state = std::move(next);
    }
    return state;
}

CurveClass replay(std::span<const CremonaStep> certificate) {
    return replay_from({0, 1}, certificate);
}

Int Decomposition::term_value(const SystemClass& system, std::size_t j) const {
    const IntersectionTerm& term = terms.at(j);
    Int base_sum = 0;
    for (int i : term.base) {
        const Int m = static_cast<std::size_t>(i) < system.mult.size() ? system.mult[i] : 0;
        base_sum = checked_add(base_sum, m);
    }
    return checked_sub(checked_mul(2, system.degree), base_sum);
}

Int Decomposition::tail_value(const SystemClass& system) const {
    const auto at = [&](int i) {
        return static_cast<std::size_t>(i) < system.mult.size() ? system.mult[i] : 0;
    };
    return checked_sub(system.degree, checked_add(at(tail.first), at(tail.second)));
}

Decomposition decompose_intersection(const SystemClass& system,
                                     std::span<const CremonaStep> certificate,
                                     std::pair<int, int> line_points) {
    replay_from(line_points, certificate);  // validates the certificate

    Decomposition out;
    out.tail = line_points;
    out.terms.reserve(certificate.size());
    for (const CremonaStep& step : certificate)
        out.terms.push_back({step.increment, step.base});

    Int value = out.tail_value(system);
    for (std::size_t j = 0; j < out.terms.size(); ++j)
        value = checked_add(value, checked_mul(out.terms[j].beta, out.term_value(system, j)));
    out.value = value;
    return out;
}

}  // namespace cremona
