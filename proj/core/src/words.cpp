#include "gjgf/words.hpp"

#include <algorithm>

#include "gjgf/errors.hpp"

namespace gjgf {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty())
    throw Error(errc::schema_error, "alphabet must contain at least one symbol");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty())
      throw Error(errc::schema_error, "alphabet symbols must be nonempty");
    auto [it, inserted] = index_.emplace(symbols_[i], static_cast<Letter>(i));
    if (!inserted)
      throw Error(errc::schema_error, "duplicate alphabet symbol '" + symbols_[i] + "'");
  }
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::index_of(std::string_view symbol) const {
  auto hit = find(symbol);
  if (!hit)
    throw Error(errc::unknown_letter,
                "symbol '" + std::string(symbol) + "' is not in the alphabet");
  return *hit;
}

Word make_word(std::span<const std::string> tokens, const Alphabet& alphabet) {
  Word w;
  w.letters.reserve(tokens.size());
  for (const auto& token : tokens) w.letters.push_back(alphabet.index_of(token));
  return w;
}

std::string word_to_string(const Word& word, const Alphabet& alphabet) {
  bool all_single = true;
  for (const auto& s : alphabet.symbols())
    if (s.size() != 1) all_single = false;
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i && !all_single) out += ' ';
    out += alphabet.symbol(word[i]);
  }
  return out;
}

bool is_prefix(const Word& prefix, const Word& word) {
  if (prefix.size() > word.size()) return false;
  return std::equal(prefix.letters.begin(), prefix.letters.end(),
                    word.letters.begin());
}

bool is_suffix(const Word& suffix, const Word& word) {
  if (suffix.size() > word.size()) return false;
  return std::equal(suffix.letters.rbegin(), suffix.letters.rend(),
                    word.letters.rbegin());
}

bool is_factor(const Word& factor, const Word& word) {
  if (factor.size() > word.size()) return false;
  if (factor.empty()) return true;
  auto it = std::search(word.letters.begin(), word.letters.end(),
                        factor.letters.begin(), factor.letters.end());
  return it != word.letters.end();
}

int count_occurrences(const Word& w, const Word& pattern) {
  if (pattern.empty() || pattern.size() > w.size()) return 0;
  int count = 0;
  for (std::size_t start = 0; start + pattern.size() <= w.size(); ++start) {
    bool hit = true;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      if (w[start + i] != pattern[i]) {
        hit = false;
        break;
      }
    }
    if (hit) ++count;
  }
  return count;
}

std::vector<Word> overlaps(const Word& v, const Word& u) {
  std::vector<Word> out;
  for (std::size_t len = 1; len < v.size(); ++len) {
    if (len > u.size()) break;
    Word r(std::vector<Letter>(v.letters.end() - len, v.letters.end()));
    if (is_prefix(r, u)) out.push_back(std::move(r));
  }
  return out;
}

Word chop(const Word& v, const Word& r) {
  if (!is_suffix(r, v) || r.size() >= v.size())
    throw Error(errc::not_a_suffix, "cannot chop: not a proper suffix");
  return Word(std::vector<Letter>(v.letters.begin(), v.letters.end() - r.size()));
}

ForbiddenSet ForbiddenSet::validate_or_reduce(std::vector<Word> candidates,
                                              const Alphabet& alphabet,
                                              bool auto_reduce) {
  for (const auto& w : candidates) {
    for (Letter l : w.letters)
      if (l >= alphabet.size())
        throw Error(errc::unknown_letter, "forbidden word uses a letter index "
                                          "outside the alphabet");
    if (w.size() < 2)
      throw Error(errc::one_letter_forbidden_word,
                  "forbidden word '" + word_to_string(w, alphabet) +
                      "' is shorter than two letters; remove that letter from "
                      "the alphabet instead");
  }

  // A candidate is redundant when another candidate occurs inside it; exact
  // duplicates keep only their first appearance.
  std::vector<bool> drop(candidates.size(), false);
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (i == j || drop[i]) continue;
      const bool duplicate = candidates[i] == candidates[j];
      if (duplicate ? i < j : is_factor(candidates[i], candidates[j])) {
        if (!auto_reduce)
          throw Error(errc::not_reduced,
                      "forbidden set is not reduced: '" +
                          word_to_string(candidates[i], alphabet) +
                          "' occurs inside '" +
                          word_to_string(candidates[j], alphabet) + "'");
        drop[j] = true;
        break;
      }
    }
  }

  ForbiddenSet out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (!drop[i]) out.words_.push_back(std::move(candidates[i]));
  return out;
}

int count_occurrences(const Word& w, const ForbiddenSet& forbidden) {
  int total = 0;
  for (const auto& v : forbidden.words()) total += count_occurrences(w, v);
  return total;
}

}  // namespace gjgf
