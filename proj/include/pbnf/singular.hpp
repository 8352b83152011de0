#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbnf/families.hpp"
#include "pbnf/formula.hpp"
#include "pbnf/poly.hpp"

namespace pbnf::singular {

// The four singular operators realised as additions: =x ↦ x+0,
// −x ↦ x+v, ¬x ↦ x+1, +x ↦ x+(v+1), where v is the target letter.
enum class SingularOp : std::uint8_t { Id, Lower, Neg, Raise };

inline constexpr std::array<SingularOp, 4> kSingularOps{SingularOp::Id, SingularOp::Lower,
                                                        SingularOp::Neg, SingularOp::Raise};

std::string_view glyph(SingularOp op);  // "=", "−", "¬", "+"
std::string_view name(SingularOp op);   // "ID", "LOWER", "NEG", "RAISE"
OperatorId to_operator(SingularOp op);
// Accepts names, ascii and unicode glyphs. Throws UnknownName.
SingularOp parse_singular(std::string_view text);

// Coordinate pair (value on p=1, value on p=0).
struct Pair {
  bool first = false;
  bool second = false;

  static Pair from_string(std::string_view two_bits);
  std::string to_string() const;
  friend bool operator==(const Pair&, const Pair&) = default;
};

// 0, v, 1 or v+1.
Poly added_template(SingularOp op, const std::string& v = "p");
// = ↦ 10, − ↦ 00, ¬ ↦ 01, + ↦ 11
Pair pair_of(SingularOp op);
// The operator whose pair value this is.
SingularOp op_of(Pair pair);

Poly apply_singular(SingularOp op, const Poly& a, const std::string& v = "p");

// Adds the templates; the result is again a singular operator.
SingularOp compose_singular(SingularOp a, SingularOp b);

// Coordinatewise XOR of values.
Pair value_add(Pair x, Pair y);

// ⟨p₋, p_x⟩ ∘ ⟨p_x, p₊⟩ computed as value additions. Always 11.
Pair inner_identity_check(SingularOp x);

// ⟨p₋, p₊⟩ ∘ ⟨p₊, p₋⟩ under both readings found in the source material: the
// plain value sum and the sum with an extra unit added to both coordinates.
struct CrossCheck {
  Pair plain;
  Pair with_extra_unit;
};
CrossCheck inner_cross_check();

// Four truth values of the coordinate-pair model.
enum class FourValue : std::uint8_t { BigTruth, LittleTruth, LittleLie, BigLie };
FourValue four_value(Pair pair);
std::string_view label(FourValue v);  // "Big Truth" ...
std::string_view symbol(FourValue v);  // "T", "t", "f", "F"

// Residue model: 0 is =, 1 is −, 2 is ¬, 3 is +. Composition is addition
// mod 4. Kept apart from the two-valued model above.
struct Z4Op {
  std::uint8_t residue = 0;
  friend bool operator==(const Z4Op&, const Z4Op&) = default;
};
Z4Op z4_compose(Z4Op a, Z4Op b);

// One step of the lowering generator around the diamond
// 10 → 00 → 01 → 11 → 10; two steps are a full negation.
Pair half_flip(Pair x);

struct DemiNegationReport {
  // Singular operators f with f∘f = ¬ under template composition.
  std::vector<SingularOp> two_valued_roots;
  // Maps on the four pairs whose square is the full flip x ↦ x+11. These
  // need all four values, i.e. they leave the two-valued model.
  std::vector<std::array<Pair, 4>> pair_map_roots;  // images of 10, 00, 01, 11
  // Residues r with r+r = 2 (mod 4).
  std::vector<Z4Op> z4_roots;
};

DemiNegationReport demi_negation_search();

// Corner reached after complementing inputs one at a time, left to right:
// g(p,q,1) → g(p',q,1) → g(p',q',1) → g(p',q',1'), then repeating.
struct Corner {
  bool p_complemented = false;
  bool q_complemented = false;
  bool output_complemented = false;

  std::string signature() const;  // "g(p',q',1)"
  // Rows of the input selectors: p then q, four columns each.
  std::array<std::string, 2> selectors() const;
  std::optional<Family> family() const;
};

Corner iterate_family_negation(std::size_t steps);

// Extended selector operators: | adds p+q, I adds p+q+1.
enum class SelectorOp : std::uint8_t { Bar, I };
Poly apply_selector(SelectorOp op, const Poly& a);

// --- singular operators on binary statements ----------------------------

struct BinaryApplication {
  Poly input;           // pbnf(f, Normal)
  std::string letter;   // target letter v
  Poly result;
  Formula statement;    // fibered back to a named statement
};

// Adds the template at the first letter of f (p for constants). Throws
// BoundExceeded for more than two letters.
BinaryApplication apply_to_binary(SingularOp op, const Formula& f);

enum class CellStatus { Match, Mismatch };

struct TableCell {
  SingularOp op;
  std::string column;       // column statement, unicode
  std::string published;   // the published cell, as printed
  std::string computed;     // fibered result, unicode
  Poly computed_poly;
  CellStatus status;
};

// All 64 cells of the singular-on-binary table checked against the published
// values; the additive rule is normative.
std::vector<TableCell> singular_table_diff();

struct ClauseCheck {
  std::string clause;    // e.g. "−(p ∨ q) = ¬p ∧ q"
  std::string source;    // "lemma" or "definition"
  Poly lhs;
  Poly rhs;
  bool agrees;
};

// Clauses of the lowering-operator De Morgan lemma and of the follow-up
// definition, each compared with the additive rule.
std::vector<ClauseCheck> de_morgan_checks();

// Klein table: entry [row][col] is row applied to (col applied to p).
std::array<std::array<Poly, 4>, 4> klein_table();
// Value table: value_add(pair_of(row), pair_of(col)).
std::array<std::array<Pair, 4>, 4> value_table();

}  // namespace pbnf::singular
