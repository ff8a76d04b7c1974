#include "cremona/typeexpr.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace cremona {

namespace {

// Repeat counts are bounded so a typo like "1^999999999" cannot allocate
// gigabytes; real vectors here have a few dozen entries.
constexpr Int kMaxCount = 100000;

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

Int parse_int(std::string_view s, const char* what) {
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(std::string(what) + " out of range: '" + std::string(s) + "'");
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(std::string("bad ") + what + ": '" + std::string(s) + "'");
    return value;
}

void parse_term(std::string_view term, std::vector<Int>& mult) {
    if (term.empty()) throw ParseError("empty multiplicity term");
    const std::size_t caret = term.find('^');
    if (caret == std::string_view::npos) {
        mult.push_back(parse_int(term, "multiplicity"));
        return;
    }
    const Int value = parse_int(term.substr(0, caret), "multiplicity");
    const Int count = parse_int(term.substr(caret + 1), "repeat count");
    if (count < 1) throw ParseError("repeat count must be >= 1");
    if (count > kMaxCount) throw ParseError("repeat count too large");
    mult.insert(mult.end(), static_cast<std::size_t>(count), value);
}

std::pair<Int, std::vector<Int>> parse_class_text(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty class expression");
    const std::size_t semi = s.find(';');
    if (s.find(';', semi + 1) != std::string::npos)
        throw ParseError("more than one ';' in class expression");

    const std::string_view degree_part =
        semi == std::string::npos ? std::string_view(s) : std::string_view(s).substr(0, semi);
    const Int degree = parse_int(degree_part, "degree");

    std::vector<Int> mult;
    if (semi != std::string::npos && semi + 1 < s.size()) {
        std::string_view rest = std::string_view(s).substr(semi + 1);
        while (!rest.empty()) {
            const std::size_t comma = rest.find(',');
            parse_term(rest.substr(0, comma), mult);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
            if (rest.empty()) throw ParseError("trailing ',' in class expression");
        }
    }
    return {degree, std::move(mult)};
}

void append_runs(std::string& out, std::span<const Int> mult) {
    for (std::size_t i = 0; i < mult.size();) {
        std::size_t j = i;
        while (j < mult.size() && mult[j] == mult[i]) ++j;
        if (i > 0) out += ',';
        out += std::to_string(mult[i]);
        if (j - i > 1) {
            out += '^';
            out += std::to_string(j - i);
        }
        i = j;
    }
}

}  // namespace

CurveClass parse_curve(std::string_view text) {
    auto [degree, mult] = parse_class_text(text);
    return {degree, std::move(mult)};
}

SystemClass parse_system(std::string_view text) {
    auto [degree, mult] = parse_class_text(text);
    return {degree, std::move(mult)};
}

std::string render_type(Int degree, std::span<const Int> mult) {
    std::string out = std::to_string(degree);
    out += ';';
    append_runs(out, mult);
    return out;
}

std::string render(const CurveClass& c) { return render_type(c.degree, c.mult); }

std::string render(const SystemClass& s) { return render_type(s.degree, s.mult); }

std::string render(const QuadricClass& q) {
    std::string out = std::to_string(q.a);
    out += ',';
    out += std::to_string(q.b);
    out += ';';
    append_runs(out, q.mult);
    return out;
}

}  // namespace cremona
