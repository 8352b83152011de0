#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pbnf/operators.hpp"

namespace pbnf {

enum class Style { Ascii, Unicode };

// Immutable propositional statement. Copies share structure, so a Formula is
// cheap to pass by value and safe to share across threads.
class Formula {
 public:
  enum class Kind { Atom, Constant, Unary, Binary };

  // `name` must be an identifier that is not a reserved keyword.
  static Formula atom(std::string name);
  static Formula constant(bool value);
  // Throws ArityError when the child count does not match the operator.
  static Formula apply(OperatorId op, std::vector<Formula> children);
  static Formula unary(OperatorId op, Formula child);
  static Formula binary(OperatorId op, Formula left, Formula right);

  Kind kind() const;
  // For applications the connective; TRUE/FALSE for constants.
  OperatorId op() const;
  const std::vector<Formula>& children() const;
  // Atom name; empty for other kinds.
  const std::string& name() const;
  bool value() const;

  // k in S(k, l): number of connective applications.
  std::size_t connective_count() const;
  // l in S(k, l): number of distinct letters.
  std::size_t letter_count() const;
  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Parses the concrete syntax documented in docs/grammar.ebnf. Throws
// SyntaxError (with byte position) or UnknownName for bad identifiers.
Formula parse(std::string_view text);

std::string print(const Formula& f, Style style = Style::Ascii);

// Letters in first-appearance order.
std::vector<std::string> letters(const Formula& f);

bool is_identifier(std::string_view name);

}  // namespace pbnf
