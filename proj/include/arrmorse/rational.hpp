#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace arrmorse {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" with optional sign and surrounding whitespace.
/// Returns nullopt on anything else (including q == 0).
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& r);

inline double to_double(const Rational& r) { return static_cast<double>(r); }

/// Positive generator of the additive subgroup of Q generated by the inputs,
/// i.e. gcd over rationals. Zero entries are ignored; all-zero input gives 0.
Rational rational_gcd(const std::vector<Rational>& xs);

}  // namespace arrmorse
