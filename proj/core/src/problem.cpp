#include "gjgf/problem.hpp"

#include "gjgf/errors.hpp"

namespace gjgf {

std::string variant_name(Variant variant) {
  switch (variant) {
    case Variant::Basic: return "basic";
    case Variant::Single: return "single";
    case Variant::Double: return "double";
    case Variant::Triple: return "triple";
    case Variant::ProbDouble: return "prob_double";
    case Variant::ProbTriple: return "prob_triple";
    case Variant::DoubleIF: return "double_if";
  }
  return "?";
}

std::string mark_name(MarkPolicy mark) {
  return mark == MarkPolicy::NegativeOne ? "neg" : "s";
}

int context_order(Variant variant) {
  switch (variant) {
    case Variant::Basic:
    case Variant::Single:
      return 1;
    case Variant::Double:
    case Variant::ProbDouble:
    case Variant::DoubleIF:
      return 2;
    case Variant::Triple:
    case Variant::ProbTriple:
      return 3;
  }
  return 1;
}

bool is_probability_variant(Variant variant) {
  return variant == Variant::ProbDouble || variant == Variant::ProbTriple ||
         variant == Variant::DoubleIF;
}

namespace {

bool kind_allowed(Variant variant, VarKind kind) {
  switch (variant) {
    case Variant::Basic:
      return false;
    case Variant::Single:
      return kind == VarKind::Single;
    case Variant::Double:
    case Variant::ProbDouble:
      return kind == VarKind::Single || kind == VarKind::Pair;
    case Variant::Triple:
    case Variant::ProbTriple:
      return kind == VarKind::Single || kind == VarKind::Pair ||
             kind == VarKind::Triple;
    case Variant::DoubleIF:
      return kind == VarKind::Single || kind == VarKind::Pair ||
             kind == VarKind::Final;
  }
  return false;
}

}  // namespace

void validate_problem(const Problem& problem) {
  const std::size_t m = problem.alphabet.size();
  for (const auto& [var, value] : problem.bindings) {
    if (!kind_allowed(problem.variant, var.kind))
      throw Error(errc::invalid_binding,
                  "binding for a variable not used by variant '" +
                      variant_name(problem.variant) + "'");
    for (int i = 0; i < var.arity(); ++i)
      if (var.letters[i] >= m)
        throw Error(errc::invalid_binding,
                    "binding letter index outside the alphabet");
    if (is_probability_variant(problem.variant) && (value < 0 || value > 1))
      throw Error(errc::invalid_binding,
                  "probability binding outside [0, 1]");
  }
}

}  // namespace gjgf
