#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "cremona/checked.hpp"

namespace cremona {

/// Type of a space curve: degree delta plus the multiplicities mu_i at the
/// marked points. Entries are positional: index i is the multiplicity at
/// point q_i. Negative entries appear in intermediate results and are kept.
struct CurveClass {
    Int degree{0};
    std::vector<Int> mult;

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

/// Class of a linear system of degree-d surfaces with assigned point
/// multiplicities m_i. Same positional conventions as CurveClass.
struct SystemClass {
    Int degree{0};
    std::vector<Int> mult;

    friend bool operator==(const SystemClass&, const SystemClass&) = default;
};

/// Divisor class a*h1 + b*h2 - sum mu_j*e_j on a smooth quadric blown up at
/// the marked points, written in the basis {h1, h2, e_1, ..., e_r}.
struct QuadricClass {
    Int a{0};
    Int b{0};
    std::vector<Int> mult;

    friend bool operator==(const QuadricClass&, const QuadricClass&) = default;
};

/// Four distinct base-point indices of one cubo-cubic transformation.
/// Indices are 0-based everywhere inside the library.
using BaseQuad = std::array<int, 4>;

/// Record of one applied transformation: the base quadruple plus the
/// increment computed at application time (gamma for curve steps, k for
/// system steps).
struct CremonaStep {
    BaseQuad base{};
    Int increment{0};

    friend bool operator==(const CremonaStep&, const CremonaStep&) = default;
};

/// v zero-padded on the right to at least n entries.
std::vector<Int> padded(const std::vector<Int>& v, std::size_t n);

// Canonical representative: zero entries dropped, the rest sorted
// non-increasing (so negative entries come last). Degree is untouched.
// A point of multiplicity 0 is the same thing as an absent point.
CurveClass normalize(const CurveClass& c);
SystemClass normalize(const SystemClass& s);

// Positional equality up to zero-padding on the right.
bool same_class(const CurveClass& x, const CurveClass& y);
bool same_class(const SystemClass& x, const SystemClass& y);
bool same_class(const QuadricClass& x, const QuadricClass& y);

/// Listing order for canonical types: degree ascending, then multiplicity
/// vectors lexicographically descending. Used for every report and golden
/// file so output is reproducible.
bool type_less(const CurveClass& x, const CurveClass& y);

struct TypeOrder {
    bool operator()(const CurveClass& x, const CurveClass& y) const { return type_less(x, y); }
};

}  // namespace cremona
