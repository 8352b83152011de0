#include "pbnf/operators.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "pbnf/errors.hpp"

namespace pbnf {
namespace {

constexpr std::array<OperatorInfo, 22> kCatalog{{
    {OperatorId::And, "AND", 2, "1000", "&", "∧", 4},
    {OperatorId::Or, "OR", 2, "1110", "|", "∨", 3},
    {OperatorId::Imp, "IMP", 2, "1011", "->", "⇒", 2},
    {OperatorId::ConvImp, "CONVIMP", 2, "1101", "<-", "⇐", 2},
    {OperatorId::NImp, "NIMP", 2, "0100", "-/>", "⇏", 2},
    {OperatorId::NConvImp, "NCONVIMP", 2, "0010", "</-", "⇍", 2},
    {OperatorId::Iff, "IFF", 2, "1001", "<->", "⇔", 1},
    {OperatorId::Xor, "XOR", 2, "0110", "^", "⊕", 1},
    {OperatorId::Nand, "NAND", 2, "0111", "nand", "↑", 4},
    {OperatorId::Nor, "NOR", 2, "0001", "nor", "↓", 3},
    {OperatorId::ProjP, "PROJ_P", 2, "1100", "projp", "projp", 1},
    {OperatorId::ProjQ, "PROJ_Q", 2, "1010", "projq", "projq", 1},
    {OperatorId::NProjP, "NPROJ_P", 2, "0011", "nprojp", "nprojp", 1},
    {OperatorId::NProjQ, "NPROJ_Q", 2, "0101", "nprojq", "nprojq", 1},
    {OperatorId::Top, "TOP", 2, "1111", "top", "top", 1},
    {OperatorId::Bot, "BOT", 2, "0000", "bot", "bot", 1},
    {OperatorId::Id, "ID", 1, "10", "=", "=", 0},
    {OperatorId::Lower, "LOWER", 1, "00", "-", "−", 0},
    {OperatorId::Neg, "NEG", 1, "01", "!", "¬", 0},
    {OperatorId::Raise, "RAISE", 1, "11", "+", "+", 0},
    {OperatorId::True, "TRUE", 0, "1", "1", "1", 0},
    {OperatorId::False, "FALSE", 0, "0", "0", "0", 0},
}};

constexpr std::array<OperatorId, 16> kBinary{
    OperatorId::And,    OperatorId::Or,     OperatorId::Imp,    OperatorId::ConvImp,
    OperatorId::NImp,   OperatorId::NConvImp, OperatorId::Iff,  OperatorId::Xor,
    OperatorId::Nand,   OperatorId::Nor,    OperatorId::ProjP,  OperatorId::ProjQ,
    OperatorId::NProjP, OperatorId::NProjQ, OperatorId::Top,    OperatorId::Bot,
};

constexpr std::array<OperatorId, 4> kSingular{
    OperatorId::Id, OperatorId::Lower, OperatorId::Neg, OperatorId::Raise};

struct Alias {
  std::string_view text;
  OperatorId op;
};

// Extra spellings accepted by operator_from_string beyond names and glyphs.
constexpr std::array<Alias, 10> kAliases{{
    {"~", OperatorId::Neg},  {"not", OperatorId::Neg},     {"→", OperatorId::Imp},
    {"←", OperatorId::ConvImp}, {"↔", OperatorId::Iff},    {"ι₁", OperatorId::Top},
    {"ι₀", OperatorId::Bot}, {"⊤", OperatorId::True},      {"⊥", OperatorId::False},
    {"'", OperatorId::Neg},
}};

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

}  // namespace

const OperatorInfo& info(OperatorId op) {
  return kCatalog[static_cast<std::size_t>(op)];
}

std::span<const OperatorInfo> catalog() { return kCatalog; }

std::span<const OperatorId> binary_operators() { return kBinary; }

std::span<const OperatorId> singular_operators() { return kSingular; }

std::optional<OperatorId> operator_by_truth(std::string_view bits) {
  for (const auto& entry : kCatalog) {
    if (entry.truth == bits) return entry.id;
  }
  return std::nullopt;
}

OperatorId operator_from_string(std::string_view text) {
  const std::string key = upper(text);
  for (const auto& entry : kCatalog) {
    if (entry.name == key || entry.ascii == text || entry.unicode == text) return entry.id;
  }
  for (const auto& alias : kAliases) {
    if (alias.text == text) return alias.op;
  }
  throw UnknownName("unknown connective '" + std::string(text) + "'");
}

}  // namespace pbnf
