#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>

namespace gjgf {

// Kind order fixes the global variable order used by the monomial order:
// t < s < single < pair < triple < final < End_a < End_{a,b}.
enum class VarKind : std::uint8_t {
  T = 0,
  S = 1,
  Single = 2,
  Pair = 3,
  Triple = 4,
  Final = 5,
  EndOne = 6,
  EndTwo = 7,
};

// A weight variable. Letters are indices into the active alphabet; unused
// slots stay zero so the defaulted comparison is the documented total order
// (kind first, then letters in alphabet order).
struct VariableName {
  VarKind kind{VarKind::T};
  std::array<std::uint16_t, 3> letters{0, 0, 0};

  static VariableName t() { return {VarKind::T, {0, 0, 0}}; }
  static VariableName s() { return {VarKind::S, {0, 0, 0}}; }
  static VariableName single(unsigned a) {
    return {VarKind::Single, {static_cast<std::uint16_t>(a), 0, 0}};
  }
  static VariableName pair(unsigned a, unsigned b) {
    return {VarKind::Pair,
            {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), 0}};
  }
  static VariableName triple(unsigned a, unsigned b, unsigned c) {
    return {VarKind::Triple,
            {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
             static_cast<std::uint16_t>(c)}};
  }
  static VariableName final_letter(unsigned a) {
    return {VarKind::Final, {static_cast<std::uint16_t>(a), 0, 0}};
  }
  static VariableName end_one(unsigned a) {
    return {VarKind::EndOne, {static_cast<std::uint16_t>(a), 0, 0}};
  }
  static VariableName end_two(unsigned a, unsigned b) {
    return {VarKind::EndTwo,
            {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), 0}};
  }

  int arity() const {
    switch (kind) {
      case VarKind::T:
      case VarKind::S:
        return 0;
      case VarKind::Single:
      case VarKind::Final:
      case VarKind::EndOne:
        return 1;
      case VarKind::Pair:
      case VarKind::EndTwo:
        return 2;
      case VarKind::Triple:
        return 3;
    }
    return 0;
  }

  friend auto operator<=>(const VariableName&, const VariableName&) = default;
};

// Text form: t, s, x_a, x_{a,b}, x_{a,b,c}, y_a, End_a, End_{a,b}.
std::string variable_to_string(const VariableName& var,
                               std::span<const std::string> symbols);

}  // namespace gjgf
