#include "cremona/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace cremona {

namespace {

// Sum of products over zero-padded vectors, exact.
Int dot(const std::vector<Int>& x, const std::vector<Int>& y) {
    Int acc = 0;
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) acc = checked_add(acc, checked_mul(x[i], y[i]));
    return acc;
}

BaseQuad validated_base(BaseQuad base) {
    std::sort(base.begin(), base.end());
    if (base[0] < 0) throw std::invalid_argument("base index is negative");
    for (int i = 0; i < 3; ++i)
        if (base[i] == base[i + 1])
            throw std::invalid_argument("base indices are not distinct");
    return base;
}

}  // namespace

Int pairing(const CurveClass& c1, const CurveClass& c2) {
    return checked_sub(checked_mul(c1.degree, c2.degree),
                       checked_mul(2, dot(c1.mult, c2.mult)));
}

CurveClass canonical_k(std::size_t r) { return {4, std::vector<Int>(r, 1)}; }

Int intersect(const SystemClass& system, const CurveClass& curve) {
    return checked_sub(checked_mul(system.degree, curve.degree),
                       dot(system.mult, curve.mult));
}

std::pair<CurveClass, CremonaStep> cremona_curve(const CurveClass& c, BaseQuad base) {
    base = validated_base(base);
    CurveClass out{c.degree, padded(c.mult, static_cast<std::size_t>(base[3]) + 1)};
    Int base_sum = 0;
    for (int i : base) base_sum = checked_add(base_sum, out.mult[i]);
    const Int gamma = checked_sub(c.degree, base_sum);
    out.degree = checked_add(c.degree, checked_mul(2, gamma));
    for (int i : base) out.mult[i] = checked_add(out.mult[i], gamma);
    return {std::move(out), CremonaStep{base, gamma}};
}

std::pair<SystemClass, CremonaStep> cremona_system(const SystemClass& s, BaseQuad base) {
    base = validated_base(base);
    SystemClass out{s.degree, padded(s.mult, static_cast<std::size_t>(base[3]) + 1)};
    Int base_sum = 0;
    for (int i : base) base_sum = checked_add(base_sum, out.mult[i]);
    const Int k = checked_sub(checked_mul(2, s.degree), base_sum);
    out.degree = checked_add(s.degree, k);
    for (int i : base) out.mult[i] = checked_add(out.mult[i], k);
    return {std::move(out), CremonaStep{base, k}};
}

QuadricClass cremona_quadric(const QuadricClass& q, BaseQuad base) {
    base = validated_base(base);
    QuadricClass out{q.a, q.b, padded(q.mult, static_cast<std::size_t>(base[3]) + 1)};
    Int base_sum = 0;
    for (int i : base) base_sum = checked_add(base_sum, out.mult[i]);
    const Int k = checked_sub(checked_add(q.a, q.b), base_sum);
    out.a = checked_add(q.a, k);
    out.b = checked_add(q.b, k);
    for (int i : base) out.mult[i] = checked_add(out.mult[i], k);
    return out;
}

Int quadric_pair(const QuadricClass& q1, const QuadricClass& q2) {
    const Int rulings = checked_add(checked_mul(q1.a, q2.b), checked_mul(q1.b, q2.a));
    return checked_sub(rulings, dot(q1.mult, q2.mult));
}

QuadricClass to_quadric(const CurveClass& c) {
    if (c.degree < 1 || c.degree % 2 == 0)
        throw std::domain_error("class degree must be odd and positive to lie on a quadric");
    const Int alpha = (c.degree - 1) / 2;
    return {alpha + 1, alpha, c.mult};
}

bool is_line(const CurveClass& c) {
    const CurveClass n = normalize(c);
    return n.degree == 1 && n.mult == std::vector<Int>{1, 1};
}

}  // namespace cremona
