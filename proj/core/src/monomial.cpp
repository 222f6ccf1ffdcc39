#include "gjgf/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace gjgf {

Monomial::Monomial(const VariableName& var, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent > 0) factors_.emplace_back(var, exponent);
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [var, e] : factors_) d += e;
  return d;
}

int Monomial::degree_of(const VariableName& var) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), var,
      [](const Factor& f, const VariableName& v) { return f.first < v; });
  if (it != factors_.end() && it->first == var) return it->second;
  return 0;
}

bool Monomial::contains_kind(VarKind kind) const {
  for (const auto& [var, e] : factors_)
    if (var.kind == kind) return true;
  return false;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto ia = factors_.begin();
  auto ib = other.factors_.begin();
  while (ia != factors_.end() && ib != other.factors_.end()) {
    if (ia->first < ib->first) {
      out.factors_.push_back(*ia++);
    } else if (ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  out.factors_.insert(out.factors_.end(), ia, factors_.end());
  out.factors_.insert(out.factors_.end(), ib, other.factors_.end());
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& [var, e] : factors_) {
    while (it != other.factors_.end() && it->first < var) ++it;
    if (it == other.factors_.end() || !(it->first == var) || it->second < e)
      return false;
  }
  return true;
}

Monomial Monomial::divided_into(const Monomial& numerator) const {
  Monomial out;
  auto in = numerator.factors_.begin();
  for (const auto& [var, e] : factors_) {
    while (in != numerator.factors_.end() && in->first < var)
      out.factors_.push_back(*in++);
    if (in == numerator.factors_.end() || !(in->first == var) || in->second < e)
      throw std::logic_error("monomial does not divide numerator");
    if (in->second > e) out.factors_.emplace_back(var, in->second - e);
    ++in;
  }
  out.factors_.insert(out.factors_.end(), in, numerator.factors_.end());
  return out;
}

std::string Monomial::to_string(std::span<const std::string> symbols) const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [var, e] : factors_) {
    if (!out.empty()) out += '*';
    out += variable_to_string(var, symbols);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

int graded_lex_compare(const Monomial& a, const Monomial& b) {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  auto ia = a.factors().begin();
  auto ib = b.factors().begin();
  while (ia != a.factors().end() && ib != b.factors().end()) {
    if (!(ia->first == ib->first)) {
      // A positive power on an earlier variable dominates lexicographically.
      return ia->first < ib->first ? 1 : -1;
    }
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
  if (ia != a.factors().end()) return 1;
  if (ib != b.factors().end()) return -1;
  return 0;
}

}  // namespace gjgf
