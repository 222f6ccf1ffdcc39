#pragma once

#include <stdexcept>
#include <string>

namespace gjgf {

// Every failure the library can report, so callers (and the CLI exit-code
// mapping) can dispatch on the condition instead of parsing messages.
enum class errc {
  division_by_zero,
  substitution_pole,
  series_not_normalized,
  singular_system,
  one_letter_forbidden_word,
  not_reduced,
  unknown_letter,
  not_a_suffix,
  cap_exceeded,
  empty_corpus,
  unknown_symbol,
  duplicate_word,
  schema_error,
  unsupported_variant,
  invalid_binding,
  bad_number,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

// Solver failures (exit code 3) versus input validation (exit code 2).
inline bool is_solver_error(errc code) noexcept {
  switch (code) {
    case errc::division_by_zero:
    case errc::substitution_pole:
    case errc::series_not_normalized:
    case errc::singular_system:
      return true;
    default:
      return false;
  }
}

}  // namespace gjgf
