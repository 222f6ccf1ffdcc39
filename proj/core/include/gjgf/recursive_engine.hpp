#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gjgf/problem.hpp"
#include "gjgf/rational_function.hpp"

namespace gjgf {

// One node of the prefix-constraint closure: the words counted from here
// start with first_letter, and may not begin with any of the banned
// prefixes. Banned prefixes all start with first_letter, are kept sorted,
// and are minimal (none is a prefix of another).
struct PrefixState {
  Letter first_letter = 0;
  std::vector<Word> banned_prefixes;

  friend bool operator==(const PrefixState&, const PrefixState&) = default;
  friend auto operator<=>(const PrefixState&, const PrefixState&) = default;
};

// Closure of all prefix states reachable from the per-letter roots (a, {}).
// States appear in breadth-first discovery order, roots first. A dead state
// (its single-letter word is banned outright) has no outgoing edges; live
// states have one edge per alphabet letter.
struct StateGraph {
  std::vector<PrefixState> states;
  std::vector<bool> dead;
  std::vector<std::vector<int>> edges;  // edges[state][letter] -> state index
  std::vector<int> roots;               // roots[letter] -> state index
};

StateGraph build_state_graph(const Alphabet& alphabet,
                             const ForbiddenSet& forbidden);

std::string state_graph_to_json(const StateGraph& graph, const Alphabet& alphabet);

struct RecursiveSolution {
  StateGraph graph;
  // Weight of the words admitted by each state (zero for dead states).
  std::vector<RationalFunction> state_weights;
  RationalFunction gf;
};

// Solves the state system for variants Single, Double, and ProbDouble under
// the plain avoidance mark; other variants raise UnsupportedVariant.
RecursiveSolution solve_recursive(const Problem& problem);
RationalFunction recursive_gf(const Problem& problem);

}  // namespace gjgf
