#include <benchmark/benchmark.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "gjgf/char_model.hpp"
#include "gjgf/cluster_engine.hpp"
#include "gjgf/oracle.hpp"
#include "gjgf/recursive_engine.hpp"

using namespace gjgf;

namespace {

Problem two_letter(Variant variant) {
  Alphabet al({"a", "b"});
  ForbiddenSet fs = ForbiddenSet::validate_or_reduce(
      {Word({0, 1, 1}), Word({1, 0})}, al, false);
  return Problem{al, fs, variant, MarkPolicy::NegativeOne, {}};
}

// Overlapping forbidden words over three letters; triple weights are bound
// so the order-3 assembly stays in the regime the engine is meant for.
Problem three_letter(Variant variant) {
  Alphabet al({"a", "b", "c"});
  ForbiddenSet fs = ForbiddenSet::validate_or_reduce(
      {Word({0, 1, 0}), Word({1, 2}), Word({2, 2, 0})}, al, false);
  Problem p{al, fs, variant, MarkPolicy::NegativeOne, {}};
  if (context_order(variant) == 3)
    for (Letter a = 0; a < 3; ++a)
      for (Letter b = 0; b < 3; ++b)
        for (Letter c = 0; c < 3; ++c)
          p.bindings[VariableName::triple(a, b, c)] = Rational(1);
  return p;
}

void bm_cluster_gf(benchmark::State& state, Problem problem) {
  for (auto _ : state) {
    RationalFunction f = generating_function(problem);
    benchmark::DoNotOptimize(f);
  }
}

void bm_recursive_gf(benchmark::State& state, Problem problem) {
  for (auto _ : state) {
    RationalFunction f = recursive_gf(problem);
    benchmark::DoNotOptimize(f);
  }
}

void bm_series_in_t(benchmark::State& state) {
  RationalFunction f = generating_function(two_letter(Variant::Double));
  for (auto _ : state) {
    SeriesPrefix s = f.series_in_t(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(s);
  }
}

void bm_oracle(benchmark::State& state) {
  Problem p = two_letter(Variant::Single);
  for (auto _ : state) {
    SeriesPrefix s =
        brute_force_series({p, static_cast<int>(state.range(0))});
    benchmark::DoNotOptimize(s);
  }
}

void bm_ingest(benchmark::State& state) {
  std::mt19937 rng(7);
  std::set<std::string> seen;
  while (static_cast<long>(seen.size()) < state.range(0)) {
    int len = std::uniform_int_distribution<int>(2, 8)(rng);
    std::string word;
    for (int i = 0; i < len; ++i)
      word += static_cast<char>('a' + rng() % 3);
    seen.insert(word);
  }
  std::vector<std::string> words(seen.begin(), seen.end());
  Alphabet letters({"a", "b", "c"});
  for (auto _ : state) {
    CharModel model = ingest_word_list(words, letters);
    benchmark::DoNotOptimize(model);
  }
}

}  // namespace

BENCHMARK_CAPTURE(bm_cluster_gf, two_letter_basic, two_letter(Variant::Basic));
BENCHMARK_CAPTURE(bm_cluster_gf, two_letter_single, two_letter(Variant::Single));
BENCHMARK_CAPTURE(bm_cluster_gf, two_letter_double, two_letter(Variant::Double));
BENCHMARK_CAPTURE(bm_cluster_gf, two_letter_triple, two_letter(Variant::Triple));
BENCHMARK_CAPTURE(bm_cluster_gf, three_letter_double,
                  three_letter(Variant::Double));
BENCHMARK_CAPTURE(bm_cluster_gf, three_letter_triple_bound,
                  three_letter(Variant::Triple));
BENCHMARK_CAPTURE(bm_recursive_gf, two_letter_single,
                  two_letter(Variant::Single));
BENCHMARK_CAPTURE(bm_recursive_gf, three_letter_double,
                  three_letter(Variant::Double));
BENCHMARK(bm_series_in_t)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_oracle)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(bm_ingest)->Arg(100)->Arg(400);

BENCHMARK_MAIN();
