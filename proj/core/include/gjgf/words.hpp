#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gjgf {

using Letter = std::uint16_t;

// Ordered list of distinct symbol tokens. Symbols are arbitrary nonempty
// strings ("a", "SP", ...), addressed by index everywhere else.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::string& symbol(Letter i) const { return symbols_.at(i); }

  std::optional<Letter> find(std::string_view symbol) const;
  Letter index_of(std::string_view symbol) const;  // throws unknown_letter

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Letter> index_;
};

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> init) : letters(init) {}
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

Word make_word(std::span<const std::string> tokens, const Alphabet& alphabet);
std::string word_to_string(const Word& word, const Alphabet& alphabet);

bool is_prefix(const Word& prefix, const Word& word);
bool is_suffix(const Word& suffix, const Word& word);
bool is_factor(const Word& factor, const Word& word);

// Occurrences of a single pattern in w; overlapping occurrences all count.
int count_occurrences(const Word& w, const Word& pattern);

// All nonempty r that are simultaneously a proper suffix of v and a prefix
// of u, in increasing length order.
std::vector<Word> overlaps(const Word& v, const Word& u);

// v with its trailing copy of r removed; chop(v, r) + r == v. r must be a
// proper suffix of v.
Word chop(const Word& v, const Word& r);

// Reduced set of forbidden words: lengths >= 2, no word a factor of another,
// kept in input order.
class ForbiddenSet {
 public:
  static ForbiddenSet validate_or_reduce(std::vector<Word> candidates,
                                         const Alphabet& alphabet,
                                         bool auto_reduce);

  const std::vector<Word>& words() const { return words_; }
  bool empty() const { return words_.empty(); }
  std::size_t size() const { return words_.size(); }

 private:
  std::vector<Word> words_;
};

// Total occurrences of all forbidden words in w.
int count_occurrences(const Word& w, const ForbiddenSet& forbidden);

}  // namespace gjgf
