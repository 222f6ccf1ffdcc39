#include "gjgf/cluster_engine.hpp"

#include <map>

#include "gjgf/errors.hpp"
#include "weight_context.hpp"

namespace gjgf {

namespace {

using detail::WeightContext;

// Weight of the prefix p = chop(v, r) contributed when a cluster starting
// with v continues with a cluster starting with u (r being the overlap):
// p's letters, p's internal pairs/triples, and the pair/triples spanning the
// junction into u. u's first two letters always exist (forbidden words have
// length >= 2), which covers junction triples even for one-letter overlaps.
Polynomial peel_weight(const WeightContext& wc, const Word& v, const Word& r,
                       const Word& u, int order) {
  const std::size_t k = v.size() - r.size();
  Polynomial w = Polynomial::one();
  for (std::size_t i = 0; i < k; ++i) w *= wc.letter_weight(v[i]);
  if (order >= 2) {
    for (std::size_t i = 0; i + 1 < k; ++i) w *= wc.pair_weight(v[i], v[i + 1]);
    w *= wc.pair_weight(v[k - 1], u[0]);
  }
  if (order == 3) {
    for (std::size_t i = 0; i + 2 < k; ++i)
      w *= wc.triple_weight(v[i], v[i + 1], v[i + 2]);
    if (k >= 2) w *= wc.triple_weight(v[k - 2], v[k - 1], u[0]);
    w *= wc.triple_weight(v[k - 1], u[0], u[1]);
  }
  return w;
}

// Weight of the one-word cluster v. The trailing context that would pair v's
// last letter(s) with whatever follows the cluster is unknown here, so orders
// 2 and 3 record it in an End dummy for later substitution.
Polynomial standalone_cluster_weight(const WeightContext& wc, const Word& v,
                                     int order) {
  const std::size_t n = v.size();
  Polynomial w = Polynomial::one();
  for (std::size_t i = 0; i < n; ++i) w *= wc.letter_weight(v[i]);
  if (order >= 2)
    for (std::size_t i = 0; i + 1 < n; ++i) w *= wc.pair_weight(v[i], v[i + 1]);
  if (order == 3) {
    for (std::size_t i = 0; i + 2 < n; ++i)
      w *= wc.triple_weight(v[i], v[i + 1], v[i + 2]);
    w *= Polynomial::variable(VariableName::end_two(v[n - 2], v[n - 1]));
  } else if (order == 2) {
    w *= Polynomial::variable(VariableName::end_one(v[n - 1]));
  }
  return w;
}

RationalFunction assemble_order1(const WeightContext& wc, const Problem& problem) {
  RationalFunction cluster_total;
  for (auto& [word, weight] : cluster_weights(problem))
    cluster_total = cluster_total + weight;
  Polynomial letters = Polynomial::zero();
  for (Letter a = 0; a < problem.alphabet.size(); ++a)
    letters += wc.letter_weight(a);
  RationalFunction denom =
      RationalFunction::from_polynomial(Polynomial::one() - letters) -
      cluster_total;
  return RationalFunction::from_polynomial(Polynomial::one()) / denom;
}

// End_e -> x_{e,c}: the cluster is followed by letter c.
std::map<VariableName, Polynomial> end1_continuation(const WeightContext& wc,
                                                     Letter c, std::size_t m) {
  std::map<VariableName, Polynomial> map;
  for (Letter e = 0; e < m; ++e)
    map[VariableName::end_one(e)] = wc.pair_weight(e, c);
  return map;
}

// End_e -> final weight (1, or y_e for the initial/final variant): the
// cluster ends the word.
std::map<VariableName, Polynomial> end1_terminal(const WeightContext& wc,
                                                 std::size_t m) {
  std::map<VariableName, Polynomial> map;
  for (Letter e = 0; e < m; ++e)
    map[VariableName::end_one(e)] = wc.final_weight(e);
  return map;
}

RationalFunction assemble_order2(const WeightContext& wc, const Problem& problem) {
  const std::size_t m = problem.alphabet.size();

  // Cluster weights grouped by the first letter of the starting word; each
  // group collapses to one numerator over one (End-free) denominator.
  std::vector<RationalFunction> clusters(m);
  for (auto& [word, weight] : cluster_weights(problem))
    clusters[word[0]] = clusters[word[0]] + weight;

  std::vector<std::map<VariableName, Polynomial>> continuation;
  continuation.reserve(m);
  for (Letter c = 0; c < m; ++c)
    continuation.push_back(end1_continuation(wc, c, m));
  const auto terminal = end1_terminal(wc, m);

  // Unknown M_a: total weight of nonempty marked words starting with letter
  // a, excluding the word-initial factor that the assembly applies. Rows are
  // scaled by the cluster denominator to stay polynomial.
  PolyMatrix matrix(m, std::vector<Polynomial>(m, Polynomial::zero()));
  std::vector<Polynomial> rhs(m, Polynomial::zero());
  for (Letter a = 0; a < m; ++a) {
    const Polynomial& scale = clusters[a].denominator();
    const Polynomial& cnum = clusters[a].numerator();
    for (Letter b = 0; b < m; ++b) {
      Polynomial entry = scale * wc.letter_weight(a) * wc.pair_weight(a, b);
      entry += cnum.substituted(continuation[b]);
      matrix[a][b] = (a == b ? scale : Polynomial::zero()) - entry;
    }
    rhs[a] = scale * wc.letter_weight(a) * wc.final_weight(a) +
             cnum.substituted(terminal);
  }

  std::vector<RationalFunction> M = solve_linear_system(matrix, rhs);
  RationalFunction f = RationalFunction::from_polynomial(Polynomial::one());
  for (Letter a = 0; a < m; ++a) {
    if (problem.variant == Variant::Double)
      f = f + M[a];
    else
      f = f + RationalFunction::from_polynomial(wc.initial_weight(a)) * M[a];
  }
  return f;
}

// End_{e,f} -> x_{f,c} x_{e,f,c} x_{f,c,d}: the cluster is followed by a
// word continuing with letters c, d.
std::map<VariableName, Polynomial> end2_continuation(const WeightContext& wc,
                                                     Letter c, Letter d,
                                                     std::size_t m) {
  std::map<VariableName, Polynomial> map;
  for (Letter e = 0; e < m; ++e)
    for (Letter f = 0; f < m; ++f)
      map[VariableName::end_two(e, f)] = wc.pair_weight(f, c) *
                                         wc.triple_weight(e, f, c) *
                                         wc.triple_weight(f, c, d);
  return map;
}

// End_{e,f} -> x_{f,c} x_{e,f,c}: exactly one letter c follows the cluster.
std::map<VariableName, Polynomial> end2_one_letter(const WeightContext& wc,
                                                   Letter c, std::size_t m) {
  std::map<VariableName, Polynomial> map;
  for (Letter e = 0; e < m; ++e)
    for (Letter f = 0; f < m; ++f)
      map[VariableName::end_two(e, f)] =
          wc.pair_weight(f, c) * wc.triple_weight(e, f, c);
  return map;
}

std::map<VariableName, Polynomial> end2_terminal(std::size_t m) {
  std::map<VariableName, Polynomial> map;
  for (Letter e = 0; e < m; ++e)
    for (Letter f = 0; f < m; ++f)
      map[VariableName::end_two(e, f)] = Polynomial::one();
  return map;
}

RationalFunction assemble_order3(const WeightContext& wc, const Problem& problem) {
  const std::size_t m = problem.alphabet.size();
  const auto idx = [m](Letter a, Letter b) { return a * m + b; };

  std::vector<RationalFunction> clusters(m * m);
  for (auto& [word, weight] : cluster_weights(problem)) {
    const std::size_t at = idx(word[0], word[1]);
    clusters[at] = clusters[at] + weight;
  }

  // Unknown M_ab: weight of marked words of length >= 2 starting with the
  // letters a, b (again net of word-initial factors).
  PolyMatrix matrix(m * m, std::vector<Polynomial>(m * m, Polynomial::zero()));
  std::vector<Polynomial> rhs(m * m, Polynomial::zero());
  for (Letter a = 0; a < m; ++a) {
    for (Letter b = 0; b < m; ++b) {
      const std::size_t row = idx(a, b);
      const Polynomial& scale = clusters[row].denominator();
      const Polynomial& cnum = clusters[row].numerator();

      // First letter free: its letter weight plus the pair and triple that
      // look ahead into the continuation starting b, c.
      const Polynomial head = wc.letter_weight(a) * wc.pair_weight(a, b);
      for (Letter c = 0; c < m; ++c)
        matrix[row][idx(b, c)] -= scale * head * wc.triple_weight(a, b, c);

      if (!cnum.is_zero())
        for (Letter c = 0; c < m; ++c)
          for (Letter d = 0; d < m; ++d)
            matrix[row][idx(c, d)] -=
                cnum.substituted(end2_continuation(wc, c, d, m));

      matrix[row][row] += scale;

      rhs[row] = scale * wc.letter_weight(a) * wc.letter_weight(b) *
                 wc.pair_weight(a, b);
      if (!cnum.is_zero()) {
        rhs[row] += cnum.substituted(end2_terminal(m));
        for (Letter c = 0; c < m; ++c)
          rhs[row] +=
              cnum.substituted(end2_one_letter(wc, c, m)) * wc.letter_weight(c);
      }
    }
  }

  std::vector<RationalFunction> M = solve_linear_system(matrix, rhs);
  RationalFunction f = RationalFunction::from_polynomial(Polynomial::one());
  const Polynomial t = Polynomial::variable(VariableName::t());
  for (Letter a = 0; a < m; ++a) {
    if (problem.variant == Variant::Triple)
      f = f + RationalFunction::from_polynomial(wc.letter_weight(a));
    else
      f = f + RationalFunction::from_polynomial(wc.initial_weight(a) * t);
  }
  for (Letter a = 0; a < m; ++a)
    for (Letter b = 0; b < m; ++b) {
      if (problem.variant == Variant::Triple)
        f = f + M[idx(a, b)];
      else
        f = f + RationalFunction::from_polynomial(wc.initial_pair_weight(a, b)) *
                    M[idx(a, b)];
    }
  return f;
}

}  // namespace

ClusterSystem build_cluster_system(const Problem& problem) {
  validate_problem(problem);
  WeightContext wc(problem);
  const int order = context_order(problem.variant);
  const auto& words = problem.forbidden.words();
  const std::size_t n = words.size();

  ClusterSystem sys;
  sys.unknowns = words;
  sys.context_order = order;
  sys.matrix.assign(n, std::vector<Polynomial>(n, Polynomial::zero()));
  sys.rhs.assign(n, Polynomial::zero());

  const Polynomial mark = wc.mark_factor();
  for (std::size_t i = 0; i < n; ++i) {
    sys.matrix[i][i] = Polynomial::one();
    for (std::size_t j = 0; j < n; ++j)
      for (const Word& r : overlaps(words[i], words[j]))
        sys.matrix[i][j] -= mark * peel_weight(wc, words[i], r, words[j], order);
    sys.rhs[i] = mark * standalone_cluster_weight(wc, words[i], order);
  }
  return sys;
}

std::vector<std::pair<Word, RationalFunction>> cluster_weights(
    const Problem& problem) {
  ClusterSystem sys = build_cluster_system(problem);
  std::vector<RationalFunction> solved = solve_linear_system(sys.matrix, sys.rhs);
  std::vector<std::pair<Word, RationalFunction>> out;
  out.reserve(solved.size());
  for (std::size_t i = 0; i < solved.size(); ++i)
    out.emplace_back(sys.unknowns[i], std::move(solved[i]));
  return out;
}

RationalFunction generating_function(const Problem& problem) {
  validate_problem(problem);
  WeightContext wc(problem);
  switch (context_order(problem.variant)) {
    case 1:
      return assemble_order1(wc, problem);
    case 2:
      return assemble_order2(wc, problem);
    default:
      return assemble_order3(wc, problem);
  }
}

}  // namespace gjgf
