#include "gjgf/char_model.hpp"

#include <istream>
#include <set>
#include <sstream>
#include <utility>

#include "gjgf/errors.hpp"
#include "json.hpp"

namespace gjgf {

namespace {

Alphabet with_separator(const Alphabet& letters) {
  std::vector<std::string> symbols = letters.symbols();
  for (const std::string& s : symbols) {
    if (s == kSeparator)
      throw Error(errc::schema_error,
                  "corpus alphabet must not contain the separator symbol SP");
    if (s.size() != 1)
      throw Error(errc::schema_error,
                  "corpus ingestion needs single-character symbols, got \"" +
                      s + "\"");
  }
  symbols.emplace_back(kSeparator);
  return Alphabet(std::move(symbols));
}

struct Tally {
  explicit Tally(std::size_t m) {
    counts.occurrences.assign(m, 0);
    counts.word_initial.assign(m, 0);
    counts.word_final.assign(m, 0);
    counts.pairs.assign(m, std::vector<long long>(m, 0));
  }

  void add(const std::vector<Letter>& word) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      ++counts.occurrences[word[i]];
      if (i + 1 < word.size()) ++counts.pairs[word[i]][word[i + 1]];
    }
    ++counts.word_initial[word.front()];
    ++counts.word_final[word.back()];
    ++counts.word_count;
  }

  CharCounts counts;
};

CharModel finish(const Alphabet& letters, Tally tally) {
  if (tally.counts.word_count == 0)
    throw Error(errc::empty_corpus, "corpus contains no words");

  Alphabet model_alphabet = with_separator(letters);
  std::size_t m = letters.size();
  Letter sep = static_cast<Letter>(m);
  std::vector<std::vector<Rational>> transition(
      m + 1, std::vector<Rational>(m + 1, Rational(0)));

  for (std::size_t a = 0; a < m; ++a) {
    long long occ = tally.counts.occurrences[a];
    if (occ == 0) continue;
    for (std::size_t b = 0; b < m; ++b)
      transition[a][b] = Rational(tally.counts.pairs[a][b], occ);
    transition[a][sep] = Rational(tally.counts.word_final[a], occ);
  }
  for (std::size_t a = 0; a < m; ++a)
    transition[sep][a] =
        Rational(tally.counts.word_initial[a], tally.counts.word_count);

  return CharModel(std::move(model_alphabet), std::move(transition),
                   std::move(tally.counts));
}

std::vector<Letter> parse_word(const std::string& text,
                               const Alphabet& letters, std::size_t line) {
  std::vector<Letter> word;
  word.reserve(text.size());
  for (char c : text) {
    auto idx = letters.find(std::string_view(&c, 1));
    if (!idx)
      throw Error(errc::unknown_symbol,
                  "line " + std::to_string(line) + ": symbol \"" +
                      std::string(1, c) + "\" is not in the alphabet");
    word.push_back(*idx);
  }
  return word;
}

}  // namespace

CharModel::CharModel(Alphabet alphabet,
                     std::vector<std::vector<Rational>> transition,
                     CharCounts counts)
    : alphabet_(std::move(alphabet)),
      transition_(std::move(transition)),
      counts_(std::move(counts)) {
  std::size_t n = alphabet_.size();
  if (n < 2 || alphabet_.symbol(static_cast<Letter>(n - 1)) != kSeparator)
    throw Error(errc::schema_error,
                "character model alphabet must end with the SP separator");
  if (transition_.size() != n)
    throw Error(errc::schema_error, "transition matrix shape mismatch");
  for (const auto& row : transition_)
    if (row.size() != n)
      throw Error(errc::schema_error, "transition matrix shape mismatch");
  if (transition_[n - 1][n - 1] != 0)
    throw Error(errc::schema_error,
                "separator-to-separator transition must be zero");
}

const Rational& CharModel::transition(Letter from, Letter to) const {
  return transition_.at(from).at(to);
}

CharModel ingest_word_list(const std::vector<std::string>& words,
                           const Alphabet& letters) {
  with_separator(letters);  // validate symbols before counting
  Tally tally(letters.size());
  std::set<std::string> seen;
  std::size_t line = 0;
  for (const std::string& text : words) {
    ++line;
    if (text.empty())
      throw Error(errc::unknown_symbol,
                  "line " + std::to_string(line) + ": empty word");
    if (!seen.insert(text).second)
      throw Error(errc::duplicate_word,
                  "line " + std::to_string(line) + ": duplicate word \"" +
                      text + "\"");
    tally.add(parse_word(text, letters, line));
  }
  return finish(letters, std::move(tally));
}

CharModel ingest_corpus_stream(std::istream& in, const Alphabet& letters,
                               bool skip_invalid, IngestReport* report) {
  with_separator(letters);
  Tally tally(letters.size());
  std::set<std::string> seen;
  IngestReport local;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    try {
      std::vector<Letter> word = parse_word(text, letters, line);
      if (!seen.insert(text).second)
        throw Error(errc::duplicate_word,
                    "line " + std::to_string(line) + ": duplicate word \"" +
                        text + "\"");
      tally.add(word);
      ++local.words_ingested;
    } catch (const Error& e) {
      if (!skip_invalid) throw;
      ++local.lines_skipped;
    }
  }
  if (report) *report = local;
  return finish(letters, std::move(tally));
}

Problem model_to_problem(const CharModel& model,
                         std::vector<Word> forbidden_words, bool auto_reduce) {
  const Alphabet& alphabet = model.alphabet();
  ForbiddenSet forbidden = ForbiddenSet::validate_or_reduce(
      std::move(forbidden_words), alphabet, auto_reduce);

  std::map<VariableName, Rational> bindings;
  std::size_t n = alphabet.size();
  for (Letter a = 0; a < n; ++a) {
    bindings[VariableName::single(a)] =
        a == model.separator() ? Rational(0) : model.initial(a);
    for (Letter b = 0; b < n; ++b)
      bindings[VariableName::pair(a, b)] = model.transition(a, b);
  }

  Problem problem{alphabet, std::move(forbidden), Variant::ProbDouble,
                  MarkPolicy::NegativeOne, std::move(bindings)};
  validate_problem(problem);
  return problem;
}

std::string CharModel::to_json() const {
  nlohmann::ordered_json doc;
  doc["alphabet"] = alphabet_.symbols();
  nlohmann::ordered_json initial_obj = nlohmann::ordered_json::object();
  for (std::size_t a = 0; a + 1 < alphabet_.size(); ++a) {
    const Rational& p = initial(static_cast<Letter>(a));
    if (p != 0)
      initial_obj[alphabet_.symbol(static_cast<Letter>(a))] =
          rational_to_string(p);
  }
  doc["initial"] = std::move(initial_obj);
  nlohmann::ordered_json trans = nlohmann::ordered_json::object();
  for (std::size_t a = 0; a < alphabet_.size(); ++a) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (std::size_t b = 0; b < alphabet_.size(); ++b) {
      const Rational& p = transition_[a][b];
      if (p != 0)
        row[alphabet_.symbol(static_cast<Letter>(b))] = rational_to_string(p);
    }
    if (!row.empty())
      trans[alphabet_.symbol(static_cast<Letter>(a))] = std::move(row);
  }
  doc["transition"] = std::move(trans);
  return doc.dump(2) + "\n";
}

CharModel CharModel::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(errc::schema_error, std::string("model JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("alphabet") ||
      !doc["alphabet"].is_array())
    throw Error(errc::schema_error,
                "model JSON must be an object with an \"alphabet\" array");

  std::vector<std::string> symbols;
  for (const auto& s : doc["alphabet"]) {
    if (!s.is_string())
      throw Error(errc::schema_error, "alphabet entries must be strings");
    if (s.get<std::string>() == kSeparator) continue;  // re-appended last
    symbols.push_back(s.get<std::string>());
  }
  symbols.emplace_back(kSeparator);
  Alphabet alphabet(std::move(symbols));
  std::size_t n = alphabet.size();
  Letter sep = static_cast<Letter>(n - 1);

  std::vector<std::vector<Rational>> transition(
      n, std::vector<Rational>(n, Rational(0)));
  if (doc.contains("transition")) {
    if (!doc["transition"].is_object())
      throw Error(errc::schema_error, "\"transition\" must be an object");
    for (const auto& [from, row] : doc["transition"].items()) {
      auto a = alphabet.find(from);
      if (!a)
        throw Error(errc::schema_error,
                    "transition row for unknown symbol \"" + from + "\"");
      if (!row.is_object())
        throw Error(errc::schema_error,
                    "transition." + from + " must be an object");
      for (const auto& [to, value] : row.items()) {
        auto b = alphabet.find(to);
        if (!b)
          throw Error(errc::schema_error, "transition." + from +
                                              ": unknown symbol \"" + to +
                                              "\"");
        if (!value.is_string())
          throw Error(errc::schema_error, "transition." + from + "." + to +
                                              " must be a rational string");
        transition[*a][*b] = parse_rational(value.get<std::string>());
      }
    }
  }
  if (doc.contains("initial")) {
    if (!doc["initial"].is_object())
      throw Error(errc::schema_error, "\"initial\" must be an object");
    for (const auto& [to, value] : doc["initial"].items()) {
      auto b = alphabet.find(to);
      if (!b)
        throw Error(errc::schema_error,
                    "initial: unknown symbol \"" + to + "\"");
      if (!value.is_string())
        throw Error(errc::schema_error,
                    "initial." + to + " must be a rational string");
      transition[sep][*b] = parse_rational(value.get<std::string>());
    }
  }
  if (transition[sep][sep] != 0)
    throw Error(errc::schema_error,
                "separator-to-separator transition must be zero");

  CharCounts counts;
  counts.occurrences.assign(n - 1, 0);
  counts.word_initial.assign(n - 1, 0);
  counts.word_final.assign(n - 1, 0);
  counts.pairs.assign(n - 1, std::vector<long long>(n - 1, 0));
  return CharModel(std::move(alphabet), std::move(transition),
                   std::move(counts));
}

}  // namespace gjgf
