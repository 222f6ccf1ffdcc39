#include "gjgf/problem_json.hpp"

#include <map>
#include <utility>
#include <vector>

#include "gjgf/errors.hpp"
#include "json.hpp"

namespace gjgf {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(errc::schema_error, path + ": " + what);
}

json parse_or_fail(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(errc::schema_error, what + ": " + e.what());
  }
}

std::string string_at(const json& node, const std::string& path) {
  if (!node.is_string()) fail(path, "expected a string");
  return node.get<std::string>();
}

Variant variant_from_string(const std::string& name, const std::string& path) {
  for (Variant v : {Variant::Basic, Variant::Single, Variant::Double,
                    Variant::Triple, Variant::ProbDouble, Variant::ProbTriple,
                    Variant::DoubleIF})
    if (variant_name(v) == name) return v;
  fail(path, "unknown variant \"" + name +
                 "\" (expected basic|single|double|triple|prob_double|"
                 "prob_triple|double_if)");
}

MarkPolicy mark_from_string(const std::string& name, const std::string& path) {
  if (name == "neg") return MarkPolicy::NegativeOne;
  if (name == "s") return MarkPolicy::SMinusOne;
  fail(path, "unknown mark \"" + name + "\" (expected neg|s)");
}

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = key.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(key.substr(start));
      return parts;
    }
    parts.push_back(key.substr(start, comma - start));
    start = comma + 1;
  }
}

Rational rational_at(const json& node, const std::string& path) {
  std::string text = string_at(node, path);
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

struct WeightKind {
  const char* name;
  VarKind kind;
  int arity;
};

constexpr WeightKind kWeightKinds[] = {
    {"single", VarKind::Single, 1},
    {"pair", VarKind::Pair, 2},
    {"triple", VarKind::Triple, 3},
    {"final", VarKind::Final, 1},
};

VariableName weight_variable(const WeightKind& kind,
                             std::span<const Letter> letters) {
  switch (kind.kind) {
    case VarKind::Single:
      return VariableName::single(letters[0]);
    case VarKind::Pair:
      return VariableName::pair(letters[0], letters[1]);
    case VarKind::Triple:
      return VariableName::triple(letters[0], letters[1], letters[2]);
    default:
      return VariableName::final_letter(letters[0]);
  }
}

void parse_weights(const json& node, const Alphabet& alphabet,
                   std::map<VariableName, Rational>& bindings) {
  if (!node.is_object()) fail("weights", "expected an object");
  for (const auto& [group, table] : node.items()) {
    const WeightKind* kind = nullptr;
    for (const WeightKind& k : kWeightKinds)
      if (group == k.name) kind = &k;
    if (!kind)
      fail("weights." + group,
           "unknown weight group (expected single|pair|triple|final)");
    if (!table.is_object()) fail("weights." + group, "expected an object");
    for (const auto& [key, value] : table.items()) {
      std::string path = "weights." + group + "[\"" + key + "\"]";
      std::vector<std::string> parts = split_key(key);
      if (static_cast<int>(parts.size()) != kind->arity)
        fail(path, "expected " + std::to_string(kind->arity) +
                       " comma-separated symbols");
      std::vector<Letter> letters;
      for (const std::string& symbol : parts) {
        auto idx = alphabet.find(symbol);
        if (!idx) fail(path, "unknown symbol \"" + symbol + "\"");
        letters.push_back(*idx);
      }
      VariableName var = weight_variable(*kind, letters);
      if (!bindings.emplace(var, rational_at(value, path)).second)
        fail(path, "duplicate weight key");
    }
  }
}

}  // namespace

Problem parse_problem_json(const std::string& text, bool auto_reduce) {
  json doc = parse_or_fail(text, "problem JSON");
  if (!doc.is_object()) fail("$", "expected a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "alphabet" && key != "forbidden" && key != "variant" &&
        key != "mark" && key != "weights")
      fail(key, "unknown key");

  if (!doc.contains("alphabet") || !doc["alphabet"].is_array())
    fail("alphabet", "expected an array of symbols");
  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < doc["alphabet"].size(); ++i)
    symbols.push_back(string_at(doc["alphabet"][i],
                                "alphabet[" + std::to_string(i) + "]"));
  Alphabet alphabet(std::move(symbols));

  std::vector<Word> words;
  if (doc.contains("forbidden")) {
    if (!doc["forbidden"].is_array())
      fail("forbidden", "expected an array of symbol arrays");
    for (std::size_t i = 0; i < doc["forbidden"].size(); ++i) {
      const json& entry = doc["forbidden"][i];
      std::string path = "forbidden[" + std::to_string(i) + "]";
      if (!entry.is_array()) fail(path, "expected an array of symbols");
      Word w;
      for (std::size_t j = 0; j < entry.size(); ++j) {
        std::string symbol =
            string_at(entry[j], path + "[" + std::to_string(j) + "]");
        auto idx = alphabet.find(symbol);
        if (!idx)
          fail(path + "[" + std::to_string(j) + "]",
               "unknown symbol \"" + symbol + "\"");
        w.letters.push_back(*idx);
      }
      words.push_back(std::move(w));
    }
  }

  if (!doc.contains("variant")) fail("variant", "missing");
  Variant variant = variant_from_string(string_at(doc["variant"], "variant"),
                                        "variant");
  MarkPolicy mark = MarkPolicy::NegativeOne;
  if (doc.contains("mark"))
    mark = mark_from_string(string_at(doc["mark"], "mark"), "mark");

  std::map<VariableName, Rational> bindings;
  if (doc.contains("weights")) parse_weights(doc["weights"], alphabet, bindings);

  ForbiddenSet forbidden =
      ForbiddenSet::validate_or_reduce(std::move(words), alphabet, auto_reduce);
  Problem problem{std::move(alphabet), std::move(forbidden), variant, mark,
                  std::move(bindings)};
  validate_problem(problem);
  return problem;
}

std::string render_problem_json(const Problem& problem) {
  ordered_json doc;
  doc["alphabet"] = problem.alphabet.symbols();
  ordered_json forbidden = ordered_json::array();
  for (const Word& w : problem.forbidden.words()) {
    ordered_json entry = ordered_json::array();
    for (Letter l : w.letters) entry.push_back(problem.alphabet.symbol(l));
    forbidden.push_back(std::move(entry));
  }
  doc["forbidden"] = std::move(forbidden);
  doc["variant"] = variant_name(problem.variant);
  doc["mark"] = mark_name(problem.mark);

  if (!problem.bindings.empty()) {
    ordered_json weights = ordered_json::object();
    for (const WeightKind& kind : kWeightKinds) {
      ordered_json table = ordered_json::object();
      for (const auto& [var, value] : problem.bindings) {
        if (var.kind != kind.kind) continue;
        std::string key = problem.alphabet.symbol(var.letters[0]);
        for (int i = 1; i < kind.arity; ++i)
          key += "," + problem.alphabet.symbol(var.letters[i]);
        table[key] = rational_to_string(value);
      }
      if (!table.empty()) weights[kind.name] = std::move(table);
    }
    doc["weights"] = std::move(weights);
  }
  return doc.dump(2) + "\n";
}

ForbiddenSet parse_forbidden_json(const std::string& text,
                                  const Alphabet& alphabet, bool auto_reduce) {
  json doc = parse_or_fail(text, "forbidden JSON");
  if (!doc.is_array()) fail("$", "expected an array of symbol arrays");
  std::vector<Word> words;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& entry = doc[i];
    std::string path = "[" + std::to_string(i) + "]";
    if (!entry.is_array()) fail(path, "expected an array of symbols");
    Word w;
    for (std::size_t j = 0; j < entry.size(); ++j) {
      std::string symbol =
          string_at(entry[j], path + "[" + std::to_string(j) + "]");
      auto idx = alphabet.find(symbol);
      if (!idx)
        fail(path + "[" + std::to_string(j) + "]",
             "unknown symbol \"" + symbol + "\"");
      w.letters.push_back(*idx);
    }
    words.push_back(std::move(w));
  }
  return ForbiddenSet::validate_or_reduce(std::move(words), alphabet,
                                          auto_reduce);
}

std::string format_output(const RationalFunction& f, const SeriesPrefix* series,
                          std::span<const std::string> symbols,
                          int decimal_digits) {
  ordered_json doc;
  doc["numerator"] = f.numerator().to_string(symbols);
  doc["denominator"] = f.denominator().to_string(symbols);
  if (series) {
    ordered_json coeffs = ordered_json::array();
    for (const Polynomial& c : series->coefficients)
      coeffs.push_back(c.to_string(symbols));
    doc["series"] = std::move(coeffs);
    if (decimal_digits > 0) {
      ordered_json decimals = ordered_json::array();
      for (const Polynomial& c : series->coefficients)
        decimals.push_back(c.is_constant()
                               ? decimal_string(c.constant_term(),
                                                decimal_digits)
                               : c.to_string(symbols));
      doc["series_decimal"] = std::move(decimals);
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace gjgf
