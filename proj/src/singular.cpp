#include "pbnf/singular.hpp"

#include <algorithm>

#include "pbnf/errors.hpp"
#include "pbnf/transform.hpp"

namespace pbnf::singular {

std::string_view glyph(SingularOp op) { return info(to_operator(op)).unicode; }

std::string_view name(SingularOp op) { return pbnf::name(to_operator(op)); }

OperatorId to_operator(SingularOp op) {
  switch (op) {
    case SingularOp::Id:
      return OperatorId::Id;
    case SingularOp::Lower:
      return OperatorId::Lower;
    case SingularOp::Neg:
      return OperatorId::Neg;
    case SingularOp::Raise:
      return OperatorId::Raise;
  }
  return OperatorId::Id;
}

SingularOp parse_singular(std::string_view text) {
  const OperatorId op = operator_from_string(text);
  for (SingularOp s : kSingularOps) {
    if (to_operator(s) == op) return s;
  }
  throw UnknownName("'" + std::string(text) + "' is not a singular operator");
}

Pair Pair::from_string(std::string_view two_bits) {
  if (two_bits.size() != 2) throw LengthMismatch("a pair has exactly two bits");
  for (std::size_t i = 0; i < 2; ++i) {
    if (two_bits[i] != '0' && two_bits[i] != '1') throw SyntaxError("expected bit", i);
  }
  return {two_bits[0] == '1', two_bits[1] == '1'};
}

std::string Pair::to_string() const {
  return std::string{first ? '1' : '0', second ? '1' : '0'};
}

Poly added_template(SingularOp op, const std::string& v) {
  switch (op) {
    case SingularOp::Id:
      return Poly::zero();
    case SingularOp::Lower:
      return Poly::variable(v);
    case SingularOp::Neg:
      return Poly::one();
    case SingularOp::Raise:
      return negate(Poly::variable(v));
  }
  return Poly::zero();
}

Pair pair_of(SingularOp op) {
  // Values of op(p) on p = 1 and p = 0.
  const Poly applied = apply_singular(op, Poly::variable("p"));
  return {evaluate(applied, {{"p", true}}), evaluate(applied, {{"p", false}})};
}

SingularOp op_of(Pair pair) {
  for (SingularOp op : kSingularOps) {
    if (pair_of(op) == pair) return op;
  }
  return SingularOp::Id;  // unreachable: the four pairs are exhausted above
}

Poly apply_singular(SingularOp op, const Poly& a, const std::string& v) {
  return a + added_template(op, v);
}

SingularOp compose_singular(SingularOp a, SingularOp b) {
  const Poly sum = added_template(a) + added_template(b);
  for (SingularOp op : kSingularOps) {
    if (added_template(op) == sum) return op;
  }
  throw Error("template sum " + sum.to_string() + " is not a singular operator");
}

Pair value_add(Pair x, Pair y) { return {x.first != y.first, x.second != y.second}; }

Pair inner_identity_check(SingularOp x) {
  const Pair lower = pair_of(SingularOp::Lower);
  const Pair raise = pair_of(SingularOp::Raise);
  const Pair px = pair_of(x);
  return value_add(value_add(lower, px), value_add(px, raise));
}

CrossCheck inner_cross_check() {
  const Pair lower = pair_of(SingularOp::Lower);
  const Pair raise = pair_of(SingularOp::Raise);
  const Pair plain = value_add(value_add(lower, raise), value_add(raise, lower));
  return {plain, value_add(plain, Pair{true, true})};
}

FourValue four_value(Pair pair) {
  if (pair.first && pair.second) return FourValue::BigTruth;
  if (pair.first) return FourValue::LittleTruth;
  if (pair.second) return FourValue::LittleLie;
  return FourValue::BigLie;
}

std::string_view label(FourValue v) {
  switch (v) {
    case FourValue::BigTruth:
      return "Big Truth";
    case FourValue::LittleTruth:
      return "Little Truth";
    case FourValue::LittleLie:
      return "Little Lie";
    case FourValue::BigLie:
      return "Big Lie";
  }
  return "";
}

std::string_view symbol(FourValue v) {
  switch (v) {
    case FourValue::BigTruth:
      return "T";
    case FourValue::LittleTruth:
      return "t";
    case FourValue::LittleLie:
      return "f";
    case FourValue::BigLie:
      return "F";
  }
  return "";
}

Z4Op z4_compose(Z4Op a, Z4Op b) {
  return {static_cast<std::uint8_t>((a.residue + b.residue) % 4)};
}

Pair half_flip(Pair x) {
  // Diamond order 10, 00, 01, 11 matches residues 0..3.
  static constexpr std::array<Pair, 4> kCycle{{{true, false}, {false, false}, {false, true}, {true, true}}};
  const auto it = std::find(kCycle.begin(), kCycle.end(), x);
  return kCycle[static_cast<std::size_t>((it - kCycle.begin() + 1) % 4)];
}

DemiNegationReport demi_negation_search() {
  DemiNegationReport report;
  for (SingularOp f : kSingularOps) {
    if (compose_singular(f, f) == SingularOp::Neg) report.two_valued_roots.push_back(f);
  }

  static constexpr std::array<Pair, 4> kPairs{{{true, false}, {false, false}, {false, true}, {true, true}}};
  const Pair flip{true, true};
  for (unsigned code = 0; code < 256; ++code) {
    std::array<std::size_t, 4> image{};
    for (std::size_t i = 0; i < 4; ++i) image[i] = (code >> (2 * i)) & 3U;
    bool root = true;
    for (std::size_t i = 0; i < 4 && root; ++i) {
      root = kPairs[image[image[i]]] == value_add(kPairs[i], flip);
    }
    if (root) {
      std::array<Pair, 4> mapped{};
      for (std::size_t i = 0; i < 4; ++i) mapped[i] = kPairs[image[i]];
      report.pair_map_roots.push_back(mapped);
    }
  }

  for (std::uint8_t r = 0; r < 4; ++r) {
    if (z4_compose({r}, {r}) == Z4Op{2}) report.z4_roots.push_back({r});
  }
  return report;
}

std::string Corner::signature() const {
  std::string s = "g(p";
  if (p_complemented) s += '\'';
  s += ",q";
  if (q_complemented) s += '\'';
  s += ",1";
  if (output_complemented) s += '\'';
  return s + ")";
}

std::array<std::string, 2> Corner::selectors() const {
  return {p_complemented ? "0011" : "1100", q_complemented ? "0101" : "1010"};
}

std::optional<Family> Corner::family() const {
  if (p_complemented != q_complemented) return std::nullopt;
  if (p_complemented) return output_complemented ? Family::PullbackComplement : Family::Pullback;
  return output_complemented ? Family::Complement : Family::Normal;
}

Corner iterate_family_negation(std::size_t steps) {
  Corner c;
  for (std::size_t k = 0; k < steps; ++k) {
    switch (k % 3) {
      case 0:
        c.p_complemented = !c.p_complemented;
        break;
      case 1:
        c.q_complemented = !c.q_complemented;
        break;
      default:
        c.output_complemented = !c.output_complemented;
        break;
    }
  }
  return c;
}

Poly apply_selector(SelectorOp op, const Poly& a) {
  Poly added = Poly::variable("p") + Poly::variable("q");
  if (op == SelectorOp::I) added = negate(added);
  return a + added;
}

// ---------------------------------------------------------------------------

BinaryApplication apply_to_binary(SingularOp op, const Formula& f) {
  const auto vars = letters(f);
  if (vars.size() > 2) {
    throw BoundExceeded("singular operators act on statements with at most two letters");
  }
  BinaryApplication out{pbnf(f), vars.empty() ? "p" : vars.front(), {}, Formula::constant(false)};
  out.result = apply_singular(op, out.input, out.letter);
  out.statement = fiber(out.result, Family::Normal).statement;
  return out;
}

namespace {

struct PublishedColumn {
  const char* statement;
  // Rows =, −, ¬, +. Alternatives are separated by ';'.
  std::array<const char*, 4> cells;
};

// The published singular-on-binary table in this library's ascii syntax
// (the source writes XOR as '|', which is '^' here).
constexpr std::array<PublishedColumn, 16> kPublished{{
    {"p & q", {"p & q", "p & !q", "p nand q", "p -> q"}},
    {"p | q", {"p | q", "p | q", "1", "p <- q"}},
    {"p -> q", {"p & q", "1", "p -> q", "p & q"}},
    {"p <- q", {"p & q", "p <- q", "p -> q", "p | q"}},
    {"p <-> q", {"p <-> q", "!p ; !q", "p ^ q", "p & q"}},
    {"!p", {"!p", "1", "p", "0"}},
    {"!q", {"!q", "1", "q", "0"}},
    {"p nor q", {"p nor q", "p <- q", "p | q", "!p & q"}},
    {"p nand q", {"p nand q", "p -> q", "p -> q", "p <- q"}},
    {"p ^ q", {"p ^ q", "q", "p <-> q", "!q"}},
    {"p -/> q", {"p -/> q", "p & q", "p -> q", "p nand q"}},
    {"p </- q", {"p </- q", "p | q", "p <- q", "p nor q"}},
    {"p", {"p", "0", "!p", "1"}},
    {"q", {"q", "0", "!q", "1"}},
    {"1", {"1", "!p", "0", "p"}},
    {"0", {"0", "-p", "1", "+p"}},
}};

std::vector<std::string> split_alternatives(const std::string& cell) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t sep = cell.find(';', start);
    out.push_back(cell.substr(start, sep == std::string::npos ? std::string::npos : sep - start));
    if (sep == std::string::npos) return out;
    start = sep + 1;
  }
}

std::string unicode_cell(const std::string& cell) {
  std::string out;
  for (const auto& alt : split_alternatives(cell)) {
    if (!out.empty()) out += " / ";
    out += print(parse(alt), Style::Unicode);
  }
  return out;
}

}  // namespace

std::vector<TableCell> singular_table_diff() {
  std::vector<TableCell> cells;
  for (const auto& column : kPublished) {
    const Formula f = parse(column.statement);
    for (std::size_t row = 0; row < 4; ++row) {
      const SingularOp op = kSingularOps[row];
      const BinaryApplication applied = apply_to_binary(op, f);
      const std::string cell = column.cells[row];
      bool match = false;
      for (const auto& alt : split_alternatives(cell)) {
        match = match || pbnf(parse(alt)) == applied.result;
      }
      cells.push_back({op, print(f, Style::Unicode), unicode_cell(cell),
                       print(applied.statement, Style::Unicode), applied.result,
                       match ? CellStatus::Match : CellStatus::Mismatch});
    }
  }
  return cells;
}

std::vector<ClauseCheck> de_morgan_checks() {
  struct Clause {
    const char* text;
    const char* source;
    const char* argument;
    const char* claimed;
  };
  static constexpr std::array<Clause, 4> kClauses{{
      {"−(p ∨ q) = ¬p ∧ q = p ⇍ q", "lemma", "p | q", "!p & q"},
      {"−(p ∧ q) = p ∧ ¬q = p ⇏ q", "lemma", "p & q", "p & !q"},
      {"−(p ∨ q) := ¬(¬p ∨ q) = p ∧ ¬q", "definition", "p | q", "!(!p | q)"},
      {"−(p ∧ q) := ¬(p ∨ ¬q) = ¬p ∧ q", "definition", "p & q", "!(p | !q)"},
  }};
  std::vector<ClauseCheck> out;
  for (const auto& clause : kClauses) {
    const Poly lhs = apply_to_binary(SingularOp::Lower, parse(clause.argument)).result;
    const Poly rhs = pbnf(parse(clause.claimed));
    out.push_back({clause.text, clause.source, lhs, rhs, lhs == rhs});
  }
  return out;
}

std::array<std::array<Poly, 4>, 4> klein_table() {
  std::array<std::array<Poly, 4>, 4> table;
  const Poly p = Poly::variable("p");
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      table[r][c] = apply_singular(kSingularOps[r], apply_singular(kSingularOps[c], p));
    }
  }
  return table;
}

std::array<std::array<Pair, 4>, 4> value_table() {
  std::array<std::array<Pair, 4>, 4> table;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      table[r][c] = value_add(pair_of(kSingularOps[r]), pair_of(kSingularOps[c]));
    }
  }
  return table;
}

}  // namespace pbnf::singular
