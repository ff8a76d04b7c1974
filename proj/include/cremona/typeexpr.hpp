#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cremona/classes.hpp"

namespace cremona {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Text grammar for class expressions, mirroring the usual exponent notation:
//
//   expr  := int [ ";" [ term ("," term)* ] ]
//   term  := int [ "^" count ]        count >= 1
//
// e.g. "13;6,4^2,3,1^9". Whitespace is ignored everywhere. Rendering groups
// consecutive equal entries, so parse(render(x)) == x positionally.

CurveClass parse_curve(std::string_view text);
SystemClass parse_system(std::string_view text);

std::string render_type(Int degree, std::span<const Int> mult);
std::string render(const CurveClass& c);
std::string render(const SystemClass& s);
std::string render(const QuadricClass& q);  // "a,b;mu..." form

}  // namespace cremona
