#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace orext {

// Exact rational scalar. All algebra in this library is zero-tolerance:
// values are never rounded, equality is literal equality in Q.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Canonical textual form: "p" when the denominator is 1, otherwise "p/q"
// with q > 0 and gcd(p, q) = 1. This is what the CLI emits.
std::string rational_to_string(const Rational& value);

// Accepts exactly the forms rational_to_string emits plus non-canonical
// fractions ("4/6" parses to 2/3): an optional leading '-', digits, and an
// optional "/q" with q a positive integer. Returns nullopt on anything else,
// including a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

} // namespace orext
