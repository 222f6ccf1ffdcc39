#include "gjgf/rational_function.hpp"

#include <algorithm>
#include <utility>

#include "gjgf/errors.hpp"

namespace gjgf {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  normalize();
}

RationalFunction RationalFunction::from_polynomial(Polynomial p) {
  RationalFunction out;
  out.num_ = std::move(p);
  out.den_ = Polynomial::one();
  return out;
}

void RationalFunction::normalize() {
  if (den_.is_zero())
    throw Error(errc::division_by_zero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::one();
    return;
  }
  const Rational lead = den_.leading_coefficient();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& other) const {
  if (den_ == other.den_)
    return RationalFunction(num_ + other.num_, den_);
  return RationalFunction(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& other) const {
  if (den_ == other.den_)
    return RationalFunction(num_ - other.num_, den_);
  return RationalFunction(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& other) const {
  if (num_.is_zero() || other.num_.is_zero()) return RationalFunction();
  return RationalFunction(num_ * other.num_, den_ * other.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& other) const {
  if (other.num_.is_zero())
    throw Error(errc::division_by_zero, "division by zero rational function");
  return RationalFunction(num_ * other.den_, den_ * other.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::pow(int exponent) const {
  if (exponent < 0) {
    if (num_.is_zero())
      throw Error(errc::division_by_zero, "negative power of zero");
    return RationalFunction(den_, num_).pow(-exponent);
  }
  RationalFunction out = from_polynomial(Polynomial::one());
  RationalFunction base = *this;
  while (exponent > 0) {
    if (exponent & 1) out = out * base;
    base = base * base;
    exponent >>= 1;
  }
  return out;
}

std::string RationalFunction::to_string(std::span<const std::string> symbols) const {
  return "(" + num_.to_string(symbols) + ") / (" + den_.to_string(symbols) + ")";
}

SeriesPrefix RationalFunction::series_in_t(int order) const {
  std::vector<Polynomial> den_coeffs = den_.coefficients_in_t();
  if (den_coeffs.empty() || !den_coeffs[0].is_constant() ||
      den_coeffs[0].is_zero())
    throw Error(errc::series_not_normalized,
                "denominator has no invertible constant term at t = 0");
  const Rational d0 = den_coeffs[0].constant_term();

  std::vector<Polynomial> num_coeffs = num_.coefficients_in_t();
  SeriesPrefix out;
  out.coefficients.resize(order + 1);
  for (int n = 0; n <= order; ++n) {
    Polynomial acc = n < static_cast<int>(num_coeffs.size()) ? num_coeffs[n]
                                                             : Polynomial::zero();
    const int reach = std::min<int>(n, static_cast<int>(den_coeffs.size()) - 1);
    for (int k = 1; k <= reach; ++k)
      acc -= den_coeffs[k] * out.coefficients[n - k];
    out.coefficients[n] = acc * (Rational(1) / d0);
  }
  return out;
}

bool ratfun_eq(const RationalFunction& a, const RationalFunction& b) {
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

namespace {

RationalFunction eval_poly(const Polynomial& p, const SubstitutionMap& map) {
  RationalFunction acc;
  for (const auto& [mono, coeff] : p.terms()) {
    Monomial untouched;
    RationalFunction piece =
        RationalFunction::from_polynomial(Polynomial::constant(coeff));
    for (const auto& [var, e] : mono.factors()) {
      auto hit = map.find(var);
      if (hit == map.end()) {
        untouched = untouched * Monomial(var, e);
      } else {
        piece = piece * hit->second.pow(e);
      }
    }
    if (!untouched.is_one())
      piece = piece *
              RationalFunction::from_polynomial(Polynomial::term(1, untouched));
    acc = acc + piece;
  }
  return acc;
}

}  // namespace

RationalFunction substitute(const RationalFunction& f, const SubstitutionMap& map) {
  RationalFunction den = eval_poly(f.denominator(), map);
  if (den.is_zero())
    throw Error(errc::substitution_pole, "substitution sends denominator to zero");
  RationalFunction num = eval_poly(f.numerator(), map);
  return num / den;
}

}  // namespace gjgf
