#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gjgf/problem.hpp"
#include "gjgf/rational.hpp"
#include "gjgf/words.hpp"

namespace gjgf {

inline constexpr std::string_view kSeparator = "SP";

// Raw tallies from ingestion, kept for reporting. The separator's own
// frequency is deliberately left as the raw word count: no normalization is
// needed downstream.
struct CharCounts {
  std::vector<long long> occurrences;   // per letter, word-final included
  std::vector<long long> word_initial;  // words starting with the letter
  std::vector<long long> word_final;    // words ending in the letter
  std::vector<std::vector<long long>> pairs;  // adjacent pairs, letters only
  long long word_count = 0;
};

// First-order character transition model over letters plus the "SP"
// separator (always the last symbol). All probabilities are exact
// rationals; for every letter a that occurs, Σ_b transition(a, b) = 1, and
// transition(SP, SP) = 0 so runs of separators never arise.
class CharModel {
 public:
  CharModel(Alphabet alphabet, std::vector<std::vector<Rational>> transition,
            CharCounts counts);

  const Alphabet& alphabet() const { return alphabet_; }
  Letter separator() const {
    return static_cast<Letter>(alphabet_.size() - 1);
  }
  const CharCounts& counts() const { return counts_; }

  const Rational& transition(Letter from, Letter to) const;
  const Rational& initial(Letter to) const {  // = transition(SP, to)
    return transition(separator(), to);
  }

  std::string to_json() const;
  static CharModel from_json(const std::string& text);

 private:
  Alphabet alphabet_;  // letters..., then "SP"
  std::vector<std::vector<Rational>> transition_;
  CharCounts counts_;
};

struct IngestReport {
  std::size_t words_ingested = 0;
  std::size_t lines_skipped = 0;
};

// Builds a model from in-memory words; each word is a string of
// single-character symbols from `letters` (which must not contain "SP").
// Throws empty_corpus, unknown_symbol (with the 1-based word position), or
// duplicate_word.
CharModel ingest_word_list(const std::vector<std::string>& words,
                           const Alphabet& letters);

// Reads one word per line (blank lines ignored). With skip_invalid, lines
// with unknown symbols or repeating an earlier word are dropped and counted
// instead of raising.
CharModel ingest_corpus_stream(std::istream& in, const Alphabet& letters,
                               bool skip_invalid,
                               IngestReport* report = nullptr);

// ProbDouble problem over the model alphabet: x_a is the initial
// probability of a (zero for SP), x_{a,b} the transition probability.
Problem model_to_problem(const CharModel& model,
                         std::vector<Word> forbidden_words,
                         bool auto_reduce = false);

}  // namespace gjgf
