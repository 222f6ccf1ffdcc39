#include <sstream>
#include <vector>

#include "doctest.h"
#include "gjgf/char_model.hpp"
#include "gjgf/cluster_engine.hpp"
#include "gjgf/errors.hpp"
#include "gjgf/oracle.hpp"

using namespace gjgf;

namespace {

const Alphabet kAB({"a", "b"});

}  // namespace

TEST_SUITE_BEGIN("corpus");

TEST_CASE("two-word example counts pairs, finals, and initials") {
  CharModel model = ingest_word_list({"ab", "b"}, kAB);
  Letter a = model.alphabet().index_of("a");
  Letter b = model.alphabet().index_of("b");
  Letter sp = model.separator();

  CHECK(model.transition(a, b) == Rational(1));
  CHECK(model.transition(a, sp) == Rational(0));
  CHECK(model.transition(b, sp) == Rational(1));
  CHECK(model.initial(a) == Rational(1, 2));
  CHECK(model.initial(b) == Rational(1, 2));
  CHECK(model.counts().word_count == 2);
  CHECK(model.counts().occurrences[a] == 1);
  CHECK(model.counts().occurrences[b] == 2);
}

TEST_CASE("single-word corpus is fully deterministic") {
  CharModel model = ingest_word_list({"a"}, Alphabet({"a"}));
  Letter a = 0;
  CHECK(model.initial(a) == Rational(1));
  CHECK(model.transition(a, model.separator()) == Rational(1));
}

TEST_CASE("rows of occurring letters sum to exactly one") {
  CharModel model =
      ingest_word_list({"abba", "bab", "aa", "b"}, kAB);
  for (Letter from = 0; from < 2; ++from) {
    Rational row(0);
    for (Letter to = 0; to <= model.separator(); ++to)
      row += model.transition(from, to);
    CHECK(row == Rational(1));
  }
  Rational initial_row(0);
  for (Letter to = 0; to < 2; ++to) initial_row += model.initial(to);
  CHECK(initial_row == Rational(1));
  CHECK(model.transition(model.separator(), model.separator()) == Rational(0));
}

TEST_CASE("a letter nearly always followed by another gets a near-one row") {
  // 342 occurrences of q, 341 followed by u, one word-final
  std::vector<std::string> words = {"q"};
  std::string w = "q";
  for (int i = 1; i <= 341; ++i) {
    w += "u";
    words.push_back(w);
  }
  CharModel model = ingest_word_list(words, Alphabet({"q", "u"}));
  Letter q = model.alphabet().index_of("q");
  Letter u = model.alphabet().index_of("u");
  CHECK(model.transition(q, u) == Rational(341, 342));
  CHECK(model.transition(q, model.separator()) == Rational(1, 342));
}

TEST_CASE("ingestion is independent of word order") {
  CharModel m1 = ingest_word_list({"ab", "ba", "aa"}, kAB);
  CharModel m2 = ingest_word_list({"aa", "ab", "ba"}, kAB);
  CHECK(m1.to_json() == m2.to_json());
}

TEST_CASE("ingestion failures carry positions") {
  try {
    ingest_word_list({"ab", "az"}, kAB);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::unknown_symbol);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  try {
    ingest_word_list({"ab", "b", "ab"}, kAB);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::duplicate_word);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(ingest_word_list({}, kAB), Error);
}

TEST_CASE("stream ingestion skips blanks and can skip invalid lines") {
  std::istringstream good("ab\n\nb\r\n\n");
  IngestReport report;
  CharModel model = ingest_corpus_stream(good, kAB, false, &report);
  CHECK(report.words_ingested == 2);
  CHECK(report.lines_skipped == 0);
  CHECK(model.counts().word_count == 2);

  std::istringstream mixed("ab\nxq\nb\nab\n");
  CharModel skipped = ingest_corpus_stream(mixed, kAB, true, &report);
  CHECK(report.words_ingested == 2);
  CHECK(report.lines_skipped == 2);  // unknown symbol line and duplicate
  CHECK(skipped.counts().word_count == 2);

  std::istringstream strict("ab\nxq\n");
  CHECK_THROWS_AS(ingest_corpus_stream(strict, kAB, false), Error);

  std::istringstream empty("\n\n");
  CHECK_THROWS_AS(ingest_corpus_stream(empty, kAB, false), Error);
}

TEST_CASE("alphabet restrictions for ingestion") {
  CHECK_THROWS_AS(ingest_word_list({"a"}, Alphabet({"a", "SP"})), Error);
  CHECK_THROWS_AS(ingest_word_list({"a"}, Alphabet({"a", "th"})), Error);
}

TEST_CASE("JSON round trip preserves every probability") {
  CharModel model = ingest_word_list({"abba", "bab", "aa", "b"}, kAB);
  CharModel back = CharModel::from_json(model.to_json());
  REQUIRE(back.alphabet().symbols() == model.alphabet().symbols());
  for (Letter x = 0; x <= model.separator(); ++x)
    for (Letter y = 0; y <= model.separator(); ++y)
      CHECK(back.transition(x, y) == model.transition(x, y));
  CHECK(back.to_json() == model.to_json());
}

TEST_CASE("malformed model JSON is rejected") {
  CHECK_THROWS_AS(CharModel::from_json("not json"), Error);
  CHECK_THROWS_AS(CharModel::from_json("{}"), Error);
  CHECK_THROWS_AS(CharModel::from_json(
                      R"({"alphabet":["a"],"transition":{"z":{}}})"),
                  Error);
  CHECK_THROWS_AS(
      CharModel::from_json(
          R"({"alphabet":["a"],"transition":{"SP":{"SP":"1/2"}}})"),
      Error);
}

TEST_CASE("model problems bind every symbol of the extended alphabet") {
  CharModel model = ingest_word_list({"ab", "b"}, kAB);
  Letter sp = model.separator();
  Word sp_a({sp, model.alphabet().index_of("a")});
  Problem p = model_to_problem(model, {sp_a});

  CHECK(p.variant == Variant::ProbDouble);
  CHECK(p.alphabet.size() == 3);
  CHECK(p.bindings.at(VariableName::single(sp)) == Rational(0));
  CHECK(p.bindings.at(VariableName::single(0)) == Rational(1, 2));
  CHECK(p.bindings.at(VariableName::pair(0, 1)) == Rational(1));
  CHECK(p.bindings.at(VariableName::pair(sp, sp)) == Rational(0));
  REQUIRE(p.forbidden.size() == 1);
  CHECK(p.forbidden.words()[0] == sp_a);
}

TEST_CASE("model pipeline agrees with direct enumeration") {
  CharModel model = ingest_word_list({"abba", "bab", "aa", "b"}, kAB);
  Letter sp = model.separator();
  Problem p = model_to_problem(model, {Word({sp, 0}), Word({1, 1})});
  SeriesPrefix engine = generating_function(p).series_in_t(7);
  SeriesPrefix oracle = brute_force_series({p, 7});
  for (int n = 0; n <= 7; ++n)
    CHECK(engine.coefficients[n] == oracle.coefficients[n]);
  // stochastic start: the full mass at n = 1 is 1
  CHECK(engine.coefficients[0] == Polynomial::one());
}

TEST_SUITE_END();
