#include "gjgf/rational.hpp"

#include "gjgf/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gjgf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void fail(std::string_view text) {
  throw Error(errc::bad_number,
              "not a rational literal: '" + std::string(text) +
                  "' (expected an integer, 'p/q', or a terminating decimal)");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) fail(text);

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail(text);
    BigInt d{std::string(den)};
    if (d == 0) fail(text);
    result = Rational(BigInt{std::string(num)}, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail(text);
    if (!whole.empty() && !all_digits(whole)) fail(text);
    if (!frac.empty() && !all_digits(frac)) fail(text);
    BigInt scaled = whole.empty() ? BigInt(0) : BigInt{std::string(whole)};
    BigInt den = 1;
    for (char c : frac) {
      scaled = scaled * 10 + (c - '0');
      den *= 10;
    }
    result = Rational(scaled, den);
  } else {
    if (!all_digits(s)) fail(text);
    result = Rational(BigInt{std::string(s)});
  }
  if (negative) result = -result;
  return result;
}

std::string rational_to_string(const Rational& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) out << '/' << denominator(value);
  return out.str();
}

std::string decimal_string(const Rational& value, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (value == 0) return "0";

  const bool negative = value < 0;
  const Rational mag = negative ? Rational(-value) : value;

  // exponent e with 10^e <= mag < 10^(e+1)
  long e = 0;
  {
    const BigInt num = numerator(mag);
    const BigInt den = denominator(mag);
    e = static_cast<long>(num.str().size()) - static_cast<long>(den.str().size());
    auto pow10 = [](long k) {
      BigInt p = 1;
      for (long i = 0; i < k; ++i) p *= 10;
      return p;
    };
    // one correction step each way covers the digit-count estimate
    while (true) {
      Rational lo = e >= 0 ? Rational(pow10(e)) : Rational(1, pow10(-e));
      if (mag < lo) { --e; continue; }
      Rational hi = e + 1 >= 0 ? Rational(pow10(e + 1)) : Rational(1, pow10(-(e + 1)));
      if (mag >= hi) { ++e; continue; }
      break;
    }
  }

  // round mag / 10^(e - s + 1) to an integer of s digits
  const long shift = e - significant_digits + 1;
  BigInt num = numerator(mag);
  BigInt den = denominator(mag);
  if (shift > 0) {
    for (long i = 0; i < shift; ++i) den *= 10;
  } else {
    for (long i = 0; i < -shift; ++i) num *= 10;
  }
  BigInt rounded = (2 * num + den) / (2 * den);
  std::string digits = rounded.str();
  if (static_cast<int>(digits.size()) > significant_digits) {
    // rounding carried into an extra digit (e.g. 9.99 -> 10.0)
    ++e;
    digits.pop_back();
  }

  std::string out;
  if (e >= significant_digits - 1) {
    out = digits + std::string(static_cast<std::size_t>(e - significant_digits + 1), '0');
  } else if (e >= 0) {
    out = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." +
          digits.substr(static_cast<std::size_t>(e + 1));
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
  }
  return negative ? "-" + out : out;
}

}  // namespace gjgf
