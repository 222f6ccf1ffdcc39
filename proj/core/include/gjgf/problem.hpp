#pragma once

#include <map>
#include <string>

#include "gjgf/rational.hpp"
#include "gjgf/variable.hpp"
#include "gjgf/words.hpp"

namespace gjgf {

enum class Variant {
  Basic,
  Single,
  Double,
  Triple,
  ProbDouble,
  ProbTriple,
  DoubleIF,
};

enum class MarkPolicy {
  NegativeOne,  // each marked forbidden factor contributes -1
  SMinusOne,    // each marked forbidden factor contributes (s - 1)
};

std::string variant_name(Variant variant);
std::string mark_name(MarkPolicy mark);

// How many consecutive letters the weight model looks at: 1 for per-letter
// weights, 2 when adjacent pairs are weighted, 3 when triples are.
int context_order(Variant variant);

// Variants whose bindings are probabilities and must lie in [0, 1].
bool is_probability_variant(Variant variant);

struct Problem {
  Alphabet alphabet;
  ForbiddenSet forbidden;
  Variant variant = Variant::Single;
  MarkPolicy mark = MarkPolicy::NegativeOne;
  // Optional numeric values for weight variables; applied while the systems
  // are built, so the outputs never contain the bound variables.
  std::map<VariableName, Rational> bindings;
};

// Checks that every binding names a variable meaningful to the variant, with
// letters inside the alphabet, and probability values in range.
void validate_problem(const Problem& problem);

}  // namespace gjgf
