#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "gjgf/polynomial.hpp"

namespace gjgf {

// Truncated power series in t; coefficients[k] is the (t-free) coefficient
// polynomial of t^k.
struct SeriesPrefix {
  std::vector<Polynomial> coefficients;
};

using SubstitutionMap = std::map<VariableName, class RationalFunction>;

// Quotient of polynomials. Kept in the weak canonical form where the
// denominator's graded-lex leading coefficient is 1; no gcd cancellation is
// attempted, so equality goes through ratfun_eq (cross multiplication).
class RationalFunction {
 public:
  RationalFunction() : num_(Polynomial::zero()), den_(Polynomial::one()) {}
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction from_polynomial(Polynomial p);
  static RationalFunction constant(Rational value) {
    return from_polynomial(Polynomial::constant(std::move(value)));
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& other) const;
  RationalFunction operator-(const RationalFunction& other) const;
  RationalFunction operator*(const RationalFunction& other) const;
  RationalFunction operator/(const RationalFunction& other) const;
  RationalFunction operator-() const;
  RationalFunction pow(int exponent) const;

  std::string to_string(std::span<const std::string> symbols) const;

  // Power-series expansion around t = 0 through t^order. Requires the
  // denominator's t-constant part to be a nonzero scalar.
  SeriesPrefix series_in_t(int order) const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

// Mathematical equality (cross multiplication), independent of representation.
bool ratfun_eq(const RationalFunction& a, const RationalFunction& b);

// Replaces variables by rational functions in both numerator and denominator.
RationalFunction substitute(const RationalFunction& f, const SubstitutionMap& map);

}  // namespace gjgf
