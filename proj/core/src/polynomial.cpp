#include "gjgf/polynomial.hpp"

#include <stdexcept>

#include "gjgf/errors.hpp"

namespace gjgf {

Polynomial Polynomial::constant(Rational value) {
  Polynomial p;
  p.add_term(Monomial::one(), value);
  return p;
}

Polynomial Polynomial::variable(const VariableName& var) {
  Polynomial p;
  p.add_term(Monomial(var), 1);
  return p;
}

Polynomial Polynomial::term(Rational coefficient, Monomial monomial) {
  Polynomial p;
  p.add_term(monomial, coefficient);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial::one());
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

Rational Polynomial::coefficient_of(const Monomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::contains_kind(VarKind kind) const {
  for (const auto& [mono, coeff] : terms_)
    if (mono.contains_kind(kind)) return true;
  return false;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

void Polynomial::add_term(const Monomial& monomial, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, -coeff);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  out -= other;
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  if (scalar == 0) return Polynomial();
  Polynomial out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * scalar);
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial out = one();
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) out *= base;
    base = base * base;
    exponent >>= 1;
  }
  return out;
}

std::vector<Polynomial> Polynomial::coefficients_in_t() const {
  std::vector<Polynomial> out;
  const VariableName t = VariableName::t();
  for (const auto& [mono, coeff] : terms_) {
    const int k = mono.degree_of(t);
    const Monomial rest =
        k == 0 ? mono : Monomial(t, k).divided_into(mono);
    if (static_cast<int>(out.size()) <= k) out.resize(k + 1);
    out[k].add_term(rest, coeff);
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

Polynomial Polynomial::substituted(
    const std::map<VariableName, Polynomial>& map) const {
  Polynomial out;
  for (const auto& [mono, coeff] : terms_) {
    Polynomial piece = constant(coeff);
    Monomial untouched;
    for (const auto& [var, e] : mono.factors()) {
      auto hit = map.find(var);
      if (hit == map.end()) {
        untouched = untouched * Monomial(var, e);
      } else {
        piece *= hit->second.pow(e);
      }
    }
    Polynomial carrier;
    carrier.add_term(untouched, 1);
    out += piece * carrier;
  }
  return out;
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(errc::division_by_zero, "division by zero polynomial");
  Polynomial remainder = *this;
  Polynomial quotient;
  const Monomial& dm = divisor.leading_monomial();
  const Rational& dc = divisor.leading_coefficient();
  while (!remainder.is_zero()) {
    const Monomial& rm = remainder.leading_monomial();
    if (!dm.divides(rm)) return std::nullopt;
    Polynomial step = term(remainder.leading_coefficient() / dc, dm.divided_into(rm));
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

std::string Polynomial::to_string(std::span<const std::string> symbols) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, coeff] = *it;
    Rational printed = coeff;
    if (out.empty()) {
      if (coeff < 0) {
        out += "-";
        printed = -coeff;
      }
    } else {
      out += coeff < 0 ? " - " : " + ";
      if (coeff < 0) printed = -coeff;
    }
    if (mono.is_one()) {
      out += rational_to_string(printed);
    } else {
      out += rational_to_string(printed);
      out += '*';
      out += mono.to_string(symbols);
    }
  }
  return out;
}

}  // namespace gjgf
