#pragma once

#include "gjgf/polynomial.hpp"
#include "gjgf/problem.hpp"

namespace gjgf::detail {

// Answers "what does this letter / pair / triple weigh" for one problem,
// folding numeric bindings in as constants so downstream systems never see
// the bound variables. Probability variants weigh letters with bare t and
// pick up their initial-letter factors only at assembly time.
class WeightContext {
 public:
  explicit WeightContext(const Problem& problem)
      : problem_(problem),
        letters_(problem.variant == Variant::Single ||
                 problem.variant == Variant::Double ||
                 problem.variant == Variant::Triple),
        pairs_(problem.variant == Variant::Double ||
               problem.variant == Variant::Triple ||
               problem.variant == Variant::ProbDouble ||
               problem.variant == Variant::DoubleIF),
        triples_(problem.variant == Variant::Triple ||
                 problem.variant == Variant::ProbTriple) {}

  Polynomial bound_or_var(const VariableName& var) const {
    auto it = problem_.bindings.find(var);
    if (it != problem_.bindings.end()) return Polynomial::constant(it->second);
    return Polynomial::variable(var);
  }

  Polynomial letter_weight(Letter a) const {
    Polynomial t = Polynomial::variable(VariableName::t());
    if (!letters_) return t;
    return t * bound_or_var(VariableName::single(a));
  }

  Polynomial pair_weight(Letter a, Letter b) const {
    if (!pairs_) return Polynomial::one();
    return bound_or_var(VariableName::pair(a, b));
  }

  Polynomial triple_weight(Letter a, Letter b, Letter c) const {
    if (!triples_) return Polynomial::one();
    return bound_or_var(VariableName::triple(a, b, c));
  }

  // Word-initial factors used by the assembly step of the Prob variants.
  Polynomial initial_weight(Letter a) const {
    return bound_or_var(VariableName::single(a));
  }
  Polynomial initial_pair_weight(Letter a, Letter b) const {
    return bound_or_var(VariableName::pair(a, b));
  }

  Polynomial final_weight(Letter a) const {
    if (problem_.variant != Variant::DoubleIF) return Polynomial::one();
    return bound_or_var(VariableName::final_letter(a));
  }

  Polynomial mark_factor() const {
    if (problem_.mark == MarkPolicy::NegativeOne)
      return Polynomial::constant(-1);
    return Polynomial::variable(VariableName::s()) - Polynomial::one();
  }

  const Problem& problem() const { return problem_; }

 private:
  const Problem& problem_;
  bool letters_;
  bool pairs_;
  bool triples_;
};

}  // namespace gjgf::detail
