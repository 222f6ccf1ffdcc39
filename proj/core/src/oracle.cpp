#include "gjgf/oracle.hpp"

#include <functional>

#include "gjgf/errors.hpp"

namespace gjgf {

namespace {

// Running word weight as a scalar times a monomial; bound variables fold
// into the scalar, unbound ones into the monomial.
struct Carried {
  Rational scalar = 1;
  Monomial mono;
};

class Enumerator {
 public:
  explicit Enumerator(const Problem& problem)
      : problem_(problem), m_(problem.alphabet.size()) {}

  SeriesPrefix run(int max_length) {
    series_.coefficients.assign(max_length + 1, Polynomial::zero());
    series_.coefficients[0] = Polynomial::one();
    if (max_length > 0) descend(Carried{}, 0, max_length);
    return std::move(series_);
  }

 private:
  void apply(Carried& carried, const VariableName& var) const {
    auto it = problem_.bindings.find(var);
    if (it != problem_.bindings.end())
      carried.scalar *= it->second;
    else
      carried.mono = carried.mono * Monomial(var);
  }

  // Weight factors gained when letter c extends the word to length n.
  void extend_weight(Carried& carried, Letter c, std::size_t n) const {
    const auto& w = word_;
    switch (problem_.variant) {
      case Variant::Basic:
        break;
      case Variant::Single:
        apply(carried, VariableName::single(c));
        break;
      case Variant::Double:
        apply(carried, VariableName::single(c));
        if (n >= 2) apply(carried, VariableName::pair(w[n - 2], c));
        break;
      case Variant::Triple:
        apply(carried, VariableName::single(c));
        if (n >= 2) apply(carried, VariableName::pair(w[n - 2], c));
        if (n >= 3) apply(carried, VariableName::triple(w[n - 3], w[n - 2], c));
        break;
      case Variant::ProbDouble:
      case Variant::DoubleIF:
        if (n == 1)
          apply(carried, VariableName::single(c));
        else
          apply(carried, VariableName::pair(w[n - 2], c));
        break;
      case Variant::ProbTriple:
        if (n == 2) apply(carried, VariableName::pair(w[0], c));
        if (n >= 3) apply(carried, VariableName::triple(w[n - 3], w[n - 2], c));
        break;
    }
  }

  // Word-level factors that depend on the finished word, not the path.
  Carried contribution(const Carried& carried, std::size_t n) const {
    Carried out = carried;
    if (problem_.variant == Variant::DoubleIF)
      apply(out, VariableName::final_letter(word_[n - 1]));
    if (problem_.variant == Variant::ProbTriple && n == 1)
      apply(out, VariableName::single(word_[0]));
    if (problem_.mark == MarkPolicy::SMinusOne && count_ > 0)
      out.mono = out.mono * Monomial(VariableName::s(), count_);
    return out;
  }

  // Occurrences of forbidden words ending exactly at the new last position.
  int new_occurrences(std::size_t n) const {
    int hits = 0;
    for (const auto& v : problem_.forbidden.words()) {
      if (v.size() > n) continue;
      bool match = true;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (word_[n - v.size() + i] != v[i]) {
          match = false;
          break;
        }
      }
      if (match) ++hits;
    }
    return hits;
  }

  void descend(const Carried& carried, std::size_t depth, int max_length) {
    const std::size_t n = depth + 1;
    for (Letter c = 0; c < m_; ++c) {
      word_.push_back(c);
      Carried next = carried;
      extend_weight(next, c, n);
      if (next.scalar == 0) {
        word_.pop_back();
        continue;
      }
      const int gained = new_occurrences(n);
      count_ += gained;
      const bool counted =
          problem_.mark == MarkPolicy::SMinusOne || count_ == 0;
      if (counted) {
        Carried c2 = contribution(next, n);
        if (c2.scalar != 0)
          series_.coefficients[n] +=
              Polynomial::term(c2.scalar, c2.mono);
        if (static_cast<int>(n) < max_length) descend(next, n, max_length);
      }
      count_ -= gained;
      word_.pop_back();
    }
  }

  const Problem& problem_;
  std::size_t m_;
  std::vector<Letter> word_;
  int count_ = 0;
  SeriesPrefix series_;
};

}  // namespace

SeriesPrefix brute_force_series(const OracleRequest& request) {
  if (request.max_length < 0)
    throw Error(errc::schema_error, "series length must be nonnegative");
  if (request.max_length > request.cap)
    throw Error(errc::cap_exceeded,
                "oracle length " + std::to_string(request.max_length) +
                    " exceeds the cap of " + std::to_string(request.cap));
  validate_problem(request.problem);
  Enumerator enumerator(request.problem);
  return enumerator.run(request.max_length);
}

}  // namespace gjgf
