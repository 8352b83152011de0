#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pbnf/formula.hpp"
#include "pbnf/poly.hpp"

namespace pbnf {

// Largest variable count a truth vector may span.
inline constexpr std::size_t kMaxVectorVariables = 20;

// Truth table column over an ordered variable list.
//
// Row r assigns variable j the value NOT bit (n-1-j) of r, so rows run from
// all-ones down to all-zeros with the first variable most significant:
// for (p, q) the rows are (1,1), (1,0), (0,1), (0,0). The selector of p is
// then 1100 and that of q is 1010.
class TruthVector {
 public:
  TruthVector() = default;
  // Throws LengthMismatch unless bits.size() == 2^vars.size().
  TruthVector(std::vector<std::string> vars, std::vector<bool> bits);
  // Parses a compact bit string such as "1011".
  static TruthVector from_string(std::string_view bits, std::vector<std::string> vars);
  // Binary vectors default to variables (p, q), unary ones to (p).
  static TruthVector from_string(std::string_view bits);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<bool>& bits() const { return bits_; }
  std::size_t arity() const { return vars_.size(); }
  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t row) const { return bits_[row]; }
  bool all_ones() const;
  bool all_zeros() const;

  std::string to_string() const;

  friend bool operator==(const TruthVector&, const TruthVector&) = default;
  friend std::strong_ordering operator<=>(const TruthVector& a, const TruthVector& b);

 private:
  std::vector<std::string> vars_;
  std::vector<bool> bits_;
};

// Assignment for the given row in the fixed row order.
Assignment row_assignment(const std::vector<std::string>& vars, std::size_t row);

// Classical two-valued semantics; the oracle every algebraic result is
// checked against. Throws UnboundVariable.
bool eval_formula(const Formula& f, const Assignment& assignment);

// Over letters(f) in first-appearance order.
TruthVector truth_vector(const Formula& f);
TruthVector truth_vector(const Formula& f, const std::vector<std::string>& vars);

// Evaluates `a` on every row. Throws UnboundVariable if `vars` misses one.
TruthVector poly_to_vector(const Poly& a, const std::vector<std::string>& vars);

// Unique multilinear polynomial with the given truth vector (Mobius
// inversion over the subset lattice).
Poly vector_to_poly(const TruthVector& v);

TruthVector bitwise_add(const TruthVector& v, const TruthVector& w);
TruthVector bitwise_mul(const TruthVector& v, const TruthVector& w);
TruthVector complement(const TruthVector& v);
// Row reversal; equals complementing every input.
TruthVector mirror(const TruthVector& v);

}  // namespace pbnf
