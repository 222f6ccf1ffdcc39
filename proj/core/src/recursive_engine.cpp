#include "gjgf/recursive_engine.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <nlohmann/json.hpp>

#include "gjgf/errors.hpp"
#include "gjgf/linear_solver.hpp"
#include "weight_context.hpp"

namespace gjgf {

namespace {

// Keep only constraints no other constraint subsumes: if q' is a prefix of q,
// any word tripping q trips q' no later, so q is redundant.
std::vector<Word> minimize_prefixes(std::vector<Word> prefixes) {
  std::sort(prefixes.begin(), prefixes.end());
  prefixes.erase(std::unique(prefixes.begin(), prefixes.end()), prefixes.end());
  std::vector<Word> kept;
  for (const auto& q : prefixes) {
    bool subsumed = false;
    for (const auto& other : prefixes) {
      if (other != q && is_prefix(other, q)) {
        subsumed = true;
        break;
      }
    }
    if (!subsumed) kept.push_back(q);
  }
  return kept;
}

PrefixState successor(const PrefixState& state, Letter b,
                      const ForbiddenSet& forbidden) {
  std::vector<Word> next;
  auto consider = [&](const Word& w) {
    // w starts with the current letter; the tail is a live constraint for
    // the successor only if it continues with b.
    if (w.size() >= 2 && w[1] == b)
      next.push_back(Word(std::vector<Letter>(w.letters.begin() + 1,
                                              w.letters.end())));
  };
  for (const auto& v : forbidden.words())
    if (v[0] == state.first_letter) consider(v);
  for (const auto& p : state.banned_prefixes) consider(p);
  return PrefixState{b, minimize_prefixes(std::move(next))};
}

bool is_dead(const PrefixState& state) {
  for (const auto& q : state.banned_prefixes)
    if (q.size() == 1) return true;
  return false;
}

}  // namespace

StateGraph build_state_graph(const Alphabet& alphabet,
                             const ForbiddenSet& forbidden) {
  const std::size_t m = alphabet.size();
  StateGraph graph;
  std::map<PrefixState, int> index;
  std::deque<int> pending;

  auto intern = [&](PrefixState state) {
    auto it = index.find(state);
    if (it != index.end()) return it->second;
    const int id = static_cast<int>(graph.states.size());
    index.emplace(state, id);
    graph.states.push_back(std::move(state));
    graph.dead.push_back(is_dead(graph.states.back()));
    graph.edges.emplace_back();
    if (!graph.dead.back()) pending.push_back(id);
    return id;
  };

  for (Letter a = 0; a < m; ++a)
    graph.roots.push_back(intern(PrefixState{a, {}}));

  while (!pending.empty()) {
    const int id = pending.front();
    pending.pop_front();
    // Copy: intern may grow graph.states and invalidate references.
    const PrefixState from = graph.states[id];
    std::vector<int> out;
    out.reserve(m);
    for (Letter b = 0; b < m; ++b)
      out.push_back(intern(successor(from, b, forbidden)));
    graph.edges[id] = std::move(out);
  }
  return graph;
}

std::string state_graph_to_json(const StateGraph& graph, const Alphabet& alphabet) {
  nlohmann::ordered_json doc;
  doc["states"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < graph.states.size(); ++i) {
    const PrefixState& st = graph.states[i];
    nlohmann::ordered_json node;
    node["index"] = i;
    node["letter"] = alphabet.symbol(st.first_letter);
    auto banned = nlohmann::ordered_json::array();
    for (const auto& w : st.banned_prefixes) {
      auto tokens = nlohmann::ordered_json::array();
      for (Letter l : w.letters) tokens.push_back(alphabet.symbol(l));
      banned.push_back(tokens);
    }
    node["banned"] = banned;
    node["dead"] = static_cast<bool>(graph.dead[i]);
    auto edges = nlohmann::ordered_json::object();
    if (!graph.dead[i])
      for (std::size_t b = 0; b < graph.edges[i].size(); ++b)
        edges[alphabet.symbol(static_cast<Letter>(b))] = graph.edges[i][b];
    node["edges"] = edges;
    doc["states"].push_back(node);
  }
  auto roots = nlohmann::ordered_json::object();
  for (std::size_t a = 0; a < graph.roots.size(); ++a)
    roots[alphabet.symbol(static_cast<Letter>(a))] = graph.roots[a];
  doc["roots"] = roots;
  return doc.dump(2);
}

RecursiveSolution solve_recursive(const Problem& problem) {
  if (problem.variant != Variant::Single && problem.variant != Variant::Double &&
      problem.variant != Variant::ProbDouble)
    throw Error(errc::unsupported_variant,
                "the recursive method supports variants single, double, and "
                "prob_double; got '" + variant_name(problem.variant) + "'");
  if (problem.mark != MarkPolicy::NegativeOne)
    throw Error(errc::unsupported_variant,
                "the recursive method only counts avoiding words (mark policy "
                "neg)");
  validate_problem(problem);

  const detail::WeightContext wc(problem);
  const std::size_t m = problem.alphabet.size();

  RecursiveSolution out;
  out.graph = build_state_graph(problem.alphabet, problem.forbidden);
  const StateGraph& graph = out.graph;

  std::vector<int> live_slot(graph.states.size(), -1);
  std::vector<int> live;
  for (std::size_t i = 0; i < graph.states.size(); ++i)
    if (!graph.dead[i]) {
      live_slot[i] = static_cast<int>(live.size());
      live.push_back(static_cast<int>(i));
    }

  const std::size_t n = live.size();
  PolyMatrix matrix(n, std::vector<Polynomial>(n, Polynomial::zero()));
  std::vector<Polynomial> rhs(n, Polynomial::zero());
  for (std::size_t s = 0; s < n; ++s) {
    const int id = live[s];
    const Letter a = graph.states[id].first_letter;
    matrix[s][s] += Polynomial::one();
    for (Letter b = 0; b < m; ++b) {
      const int succ = graph.edges[id][b];
      if (graph.dead[succ]) continue;
      matrix[s][live_slot[succ]] -= wc.letter_weight(a) * wc.pair_weight(a, b);
    }
    rhs[s] = wc.letter_weight(a);
  }

  std::vector<RationalFunction> solved = solve_linear_system(matrix, rhs);
  out.state_weights.assign(graph.states.size(), RationalFunction());
  for (std::size_t s = 0; s < n; ++s) out.state_weights[live[s]] = solved[s];

  out.gf = RationalFunction::from_polynomial(Polynomial::one());
  for (Letter a = 0; a < m; ++a) {
    const RationalFunction& root = out.state_weights[graph.roots[a]];
    if (problem.variant == Variant::ProbDouble)
      out.gf = out.gf +
               RationalFunction::from_polynomial(wc.initial_weight(a)) * root;
    else
      out.gf = out.gf + root;
  }
  return out;
}

RationalFunction recursive_gf(const Problem& problem) {
  return solve_recursive(problem).gf;
}

}  // namespace gjgf
