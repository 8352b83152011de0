#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace pbnf {

// Catalog of connectives: the 16 binary operators, the four singular
// (unary) operators and the two constants.
enum class OperatorId : std::uint8_t {
  // binary
  And,
  Or,
  Imp,
  ConvImp,
  NImp,
  NConvImp,
  Iff,
  Xor,
  Nand,
  Nor,
  ProjP,
  ProjQ,
  NProjP,
  NProjQ,
  Top,
  Bot,
  // singular
  Id,
  Lower,
  Neg,
  Raise,
  // constants
  True,
  False,
};

struct OperatorInfo {
  OperatorId id;
  std::string_view name;     // canonical, e.g. "NCONVIMP"
  int arity;                 // 0, 1 or 2
  std::string_view truth;    // 2^arity bits, rows (1,1),(1,0),(0,1),(0,0)
  std::string_view ascii;    // printed glyph in ascii style
  std::string_view unicode;  // printed glyph in unicode style
  // Binding strength for binary connectives, 4 binds tightest.
  int precedence;
};

const OperatorInfo& info(OperatorId op);

// All 22 catalog entries in declaration order.
std::span<const OperatorInfo> catalog();

// The 16 binary operators.
std::span<const OperatorId> binary_operators();

// ID, LOWER, NEG, RAISE.
std::span<const OperatorId> singular_operators();

inline int arity(OperatorId op) { return info(op).arity; }
inline std::string_view name(OperatorId op) { return info(op).name; }

// Looks up the operator with the given truth vector among operators of the
// given arity. The mapping is a bijection within each arity.
std::optional<OperatorId> operator_by_truth(std::string_view bits);

// Accepts canonical names (case-insensitive), ascii and unicode glyphs and
// the keyword aliases, e.g. "nand", "NAND", "↑". Throws UnknownName.
OperatorId operator_from_string(std::string_view text);

}  // namespace pbnf
