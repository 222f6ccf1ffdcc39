#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gjgf {

// Exact arbitrary-precision rational. boost keeps the canonical form we
// rely on: denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" (q > 0), plain integers, and terminating decimals such as
// "0.75" (converted exactly, never through floating point).
// Throws Error{bad_number} on anything else.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& value);

// Fixed-notation decimal rendering rounded to `significant_digits`
// significant figures (half away from zero). Display only; the library
// itself never computes in decimal.
std::string decimal_string(const Rational& value, int significant_digits = 5);

}  // namespace gjgf
