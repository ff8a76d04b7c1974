#include "cremona/classes.hpp"

#include <algorithm>
#include <functional>

namespace cremona {

std::vector<Int> padded(const std::vector<Int>& v, std::size_t n) {
    std::vector<Int> out = v;
    if (out.size() < n) out.resize(n, 0);
    return out;
}

namespace {

std::vector<Int> canonical_vector(const std::vector<Int>& v) {
    std::vector<Int> out;
    out.reserve(v.size());
    for (Int m : v)
        if (m != 0) out.push_back(m);
    std::sort(out.begin(), out.end(), std::greater<Int>());
    return out;
}

bool padded_equal(const std::vector<Int>& x, const std::vector<Int>& y) {
    const std::size_t n = std::max(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Int a = i < x.size() ? x[i] : 0;
        const Int b = i < y.size() ? y[i] : 0;
        if (a != b) return false;
    }
    return true;
}

}  // namespace

CurveClass normalize(const CurveClass& c) { return {c.degree, canonical_vector(c.mult)}; }

SystemClass normalize(const SystemClass& s) { return {s.degree, canonical_vector(s.mult)}; }

bool same_class(const CurveClass& x, const CurveClass& y) {
    return x.degree == y.degree && padded_equal(x.mult, y.mult);
}

bool same_class(const SystemClass& x, const SystemClass& y) {
    return x.degree == y.degree && padded_equal(x.mult, y.mult);
}

bool same_class(const QuadricClass& x, const QuadricClass& y) {
    return x.a == y.a && x.b == y.b && padded_equal(x.mult, y.mult);
}

bool type_less(const CurveClass& x, const CurveClass& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return std::lexicographical_compare(y.mult.begin(), y.mult.end(),
                                        x.mult.begin(), x.mult.end());
}

}  // namespace cremona
