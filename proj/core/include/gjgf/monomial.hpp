#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gjgf/variable.hpp"

namespace gjgf {

// Product of variable powers. Factors are kept sorted by variable with
// strictly positive exponents; the empty monomial is 1.
class Monomial {
 public:
  using Factor = std::pair<VariableName, int>;

  Monomial() = default;
  explicit Monomial(const VariableName& var, int exponent = 1);

  static Monomial one() { return Monomial(); }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int total_degree() const;
  int degree_of(const VariableName& var) const;
  bool contains_kind(VarKind kind) const;

  Monomial operator*(const Monomial& other) const;

  // Exact quotient: nullopt-like behaviour via the bool flag (avoids optional
  // in the hot path of polynomial division).
  bool divides(const Monomial& other) const;
  Monomial divided_into(const Monomial& numerator) const;  // numerator / *this

  std::string to_string(std::span<const std::string> symbols) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

// Graded lexicographic order: compare total degree first; among equal degrees
// the monomial with the higher power of the earliest differing variable wins.
// Returns <0, 0, >0 like strcmp.
int graded_lex_compare(const Monomial& a, const Monomial& b);

struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return graded_lex_compare(a, b) < 0;
  }
};

}  // namespace gjgf
