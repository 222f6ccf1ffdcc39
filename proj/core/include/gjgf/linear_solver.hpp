#pragma once

#include <vector>

#include "gjgf/rational_function.hpp"

namespace gjgf {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Solves A x = b exactly over the polynomial fraction field using
// fraction-free Gauss-Jordan elimination (Montante / Bareiss). Every division
// performed along the way is an exact polynomial division, and all solution
// components come back over one shared determinant denominator. Throws a
// singular_system error when no nonzero pivot can be found for some column.
std::vector<RationalFunction> solve_linear_system(const PolyMatrix& matrix,
                                                  const std::vector<Polynomial>& rhs);

}  // namespace gjgf
