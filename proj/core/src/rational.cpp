#include "orext/rational.hpp"

#include <algorithm>
#include <cctype>

namespace orext {

std::string rational_to_string(const Rational& value) {
    return value.str();
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den)) return std::nullopt;
    }
    bool negative = false;
    if (!num.empty() && num.front() == '-') {
        negative = true;
        num.remove_prefix(1);
    }
    if (!all_digits(num)) return std::nullopt;

    // Built from an integer pair so GMP canonicalizes the result; string
    // construction of mpq does not reduce fractions.
    Integer p{std::string(num)};
    if (negative) p = -p;
    Integer q = den.empty() ? Integer(1) : Integer{std::string(den)};
    if (q == 0) return std::nullopt;
    return Rational(p, q);
}

} // namespace orext
