#pragma once

#include <span>
#include <string>

#include "gjgf/problem.hpp"
#include "gjgf/rational_function.hpp"

namespace gjgf {

// Reads a problem document: an object with "alphabet" (list of symbols),
// "forbidden" (list of symbol lists), "variant", optional "mark"
// ("neg" | "s", default "neg"), and optional "weights" holding per-kind
// objects single/pair/triple/final keyed like "a", "a,b", "a,b,c" with
// rational string values ("3/4" or "0.75"). Schema violations raise
// Error{schema_error} naming the offending path.
Problem parse_problem_json(const std::string& text, bool auto_reduce = false);

// Inverse of parse_problem_json: parsing the rendered text reproduces the
// problem exactly.
std::string render_problem_json(const Problem& problem);

// Reads a bare forbidden-word list (array of symbol arrays) over an
// existing alphabet.
ForbiddenSet parse_forbidden_json(const std::string& text,
                                  const Alphabet& alphabet,
                                  bool auto_reduce = false);

// Canonical result document: {"numerator", "denominator", "series"?},
// byte-deterministic. With decimal_digits > 0, constant series
// coefficients gain a "series_decimal" rendering rounded to that many
// significant figures.
std::string format_output(const RationalFunction& f,
                          const SeriesPrefix* series,
                          std::span<const std::string> symbols,
                          int decimal_digits = 0);

}  // namespace gjgf
