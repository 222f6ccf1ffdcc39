#pragma once

#include <utility>
#include <vector>

#include "gjgf/linear_solver.hpp"
#include "gjgf/problem.hpp"
#include "gjgf/rational_function.hpp"

namespace gjgf {

// The linear system whose unknowns are the cluster weights C[v], one per
// forbidden word, in input order. For context order 2 the right-hand sides
// carry End_a dummies recording a cluster's last letter; for order 3,
// End_{a,b} dummies recording its last two letters.
struct ClusterSystem {
  std::vector<Word> unknowns;
  PolyMatrix matrix;
  std::vector<Polynomial> rhs;
  int context_order = 1;
};

ClusterSystem build_cluster_system(const Problem& problem);

// Solved cluster weights, in forbidden-set input order. Entries may contain
// End variables (orders 2 and 3); generating_function eliminates them.
std::vector<std::pair<Word, RationalFunction>> cluster_weights(
    const Problem& problem);

// Full cluster-method generating function for the problem's variant. The
// result contains no End variables, and its denominator has a nonzero
// constant t-free part, so series_in_t always applies.
RationalFunction generating_function(const Problem& problem);

}  // namespace gjgf
