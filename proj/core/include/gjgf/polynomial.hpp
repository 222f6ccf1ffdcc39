#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gjgf/monomial.hpp"
#include "gjgf/rational.hpp"
#include "gjgf/variable.hpp"

namespace gjgf {

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// kept in ascending graded-lex order; printing walks them backwards so the
// canonical text form is descending.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  Polynomial() = default;

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return constant(1); }
  static Polynomial constant(Rational value);
  static Polynomial variable(const VariableName& var);
  static Polynomial term(Rational coefficient, Monomial monomial);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the empty monomial (the value, when is_constant()).
  Rational constant_term() const;

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational coefficient_of(const Monomial& monomial) const;
  bool contains_kind(VarKind kind) const;
  int total_degree() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator*=(const Polynomial& other);
  Polynomial operator*(const Rational& scalar) const;

  Polynomial pow(int exponent) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Coefficients grouped by the power of t; index k holds the (t-free)
  // coefficient of t^k. Trailing zero entries are trimmed.
  std::vector<Polynomial> coefficients_in_t() const;

  // Replaces each mapped variable by the given polynomial.
  Polynomial substituted(const std::map<VariableName, Polynomial>& map) const;

  // Exact quotient by leading-term elimination; nullopt when the division is
  // not exact.
  std::optional<Polynomial> exact_divide(const Polynomial& divisor) const;

  std::string to_string(std::span<const std::string> symbols) const;

 private:
  void add_term(const Monomial& monomial, const Rational& coefficient);

  TermMap terms_;
};

}  // namespace gjgf
