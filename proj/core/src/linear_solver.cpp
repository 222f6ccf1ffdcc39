#include "gjgf/linear_solver.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "gjgf/errors.hpp"

namespace gjgf {

namespace {

Polynomial exact_or_throw(const Polynomial& numerator, const Polynomial& divisor) {
  auto q = numerator.exact_divide(divisor);
  if (!q)
    throw std::logic_error("fraction-free elimination produced an inexact division");
  return std::move(*q);
}

}  // namespace

std::vector<RationalFunction> solve_linear_system(const PolyMatrix& matrix,
                                                  const std::vector<Polynomial>& rhs) {
  const std::size_t n = matrix.size();
  if (rhs.size() != n)
    throw std::invalid_argument("right-hand side does not match matrix size");
  for (const auto& row : matrix)
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  if (n == 0) return {};

  // Augmented matrix; column n carries the right-hand side.
  std::vector<std::vector<Polynomial>> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i] = matrix[i];
    aug[i].push_back(rhs[i]);
  }

  // Montante scheme: full Gauss-Jordan where every 2x2 cross product is
  // divided by the previous pivot. All intermediate entries are minors of the
  // input, so the divisions stay exact and growth stays polynomial. At the
  // end the diagonal holds det(A) (up to a row-swap sign shared by the whole
  // matrix) and column n holds det(A) * x.
  Polynomial prev = Polynomial::one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = n;
    std::size_t pivot_terms = 0;
    for (std::size_t i = k; i < n; ++i) {
      if (aug[i][k].is_zero()) continue;
      const std::size_t terms = aug[i][k].terms().size();
      if (pivot_row == n || terms < pivot_terms) {
        pivot_row = i;
        pivot_terms = terms;
      }
    }
    if (pivot_row == n)
      throw Error(errc::singular_system, "linear system has no unique solution");
    if (pivot_row != k) std::swap(aug[pivot_row], aug[k]);

    const Polynomial pivot = aug[k][k];
    const bool trivial_prev = prev == Polynomial::one();
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Polynomial coef = aug[i][k];
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == k) continue;
        Polynomial cross = pivot * aug[i][j];
        if (!coef.is_zero()) cross -= coef * aug[k][j];
        aug[i][j] = trivial_prev ? std::move(cross) : exact_or_throw(cross, prev);
      }
      aug[i][k] = Polynomial::zero();
    }
    prev = pivot;
  }

  std::vector<RationalFunction> solution;
  solution.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    solution.emplace_back(aug[i][n], aug[i][i]);
  return solution;
}

}  // namespace gjgf
