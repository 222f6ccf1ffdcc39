#include "gjgf/variable.hpp"

#include <stdexcept>

namespace gjgf {

namespace {

const std::string& symbol_at(std::span<const std::string> symbols, std::uint16_t i) {
  if (i >= symbols.size()) throw std::out_of_range("letter index outside alphabet");
  return symbols[i];
}

std::string subscripted(char head, std::span<const std::string> symbols,
                        const std::array<std::uint16_t, 3>& letters, int arity) {
  std::string out(1, head);
  out += '_';
  if (arity == 1) {
    out += symbol_at(symbols, letters[0]);
    return out;
  }
  out += '{';
  for (int i = 0; i < arity; ++i) {
    if (i) out += ',';
    out += symbol_at(symbols, letters[i]);
  }
  out += '}';
  return out;
}

}  // namespace

std::string variable_to_string(const VariableName& var,
                               std::span<const std::string> symbols) {
  switch (var.kind) {
    case VarKind::T:
      return "t";
    case VarKind::S:
      return "s";
    case VarKind::Single:
    case VarKind::Pair:
    case VarKind::Triple:
      return subscripted('x', symbols, var.letters, var.arity());
    case VarKind::Final:
      return subscripted('y', symbols, var.letters, var.arity());
    case VarKind::EndOne:
      return "End_" + symbol_at(symbols, var.letters[0]);
    case VarKind::EndTwo:
      return "End_{" + symbol_at(symbols, var.letters[0]) + "," +
             symbol_at(symbols, var.letters[1]) + "}";
  }
  throw std::logic_error("unhandled variable kind");
}

}  // namespace gjgf
