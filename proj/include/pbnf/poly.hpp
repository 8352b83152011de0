#pragma once

#include <array>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pbnf/operators.hpp"

namespace pbnf {

// A product of distinct variables, kept sorted. The empty monomial is 1.
using Monomial = std::vector<std::string>;

// Higher degree first, then lexicographic: pq + p + q + 1.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using Assignment = std::map<std::string, bool>;

// Canonical multilinear polynomial over the two-element field.
//
// The representation is the set of monomials with coefficient 1, so two
// polynomials are equal iff their monomial sets are equal. Every operation
// returns a reduced value: x^2 = x within a monomial and m + m = 0 across
// monomials.
class Poly {
 public:
  using Terms = std::set<Monomial, MonomialOrder>;

  Poly() = default;  // zero

  static Poly zero() { return {}; }
  static Poly one();
  static Poly constant(bool value) { return value ? one() : zero(); }
  static Poly variable(std::string name);
  // Reduces arbitrary monomials (repeated variables, repeated monomials).
  static Poly from_monomials(const std::vector<std::vector<std::string>>& monomials);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const { return is_zero() || is_one(); }
  std::size_t degree() const;
  // Sorted, deduplicated.
  std::vector<std::string> variables() const;

  // "pq+p+1"; uses '*' between factors when a name is not letter+digits.
  std::string to_string() const;

  Poly& operator+=(const Poly& other);
  Poly& operator*=(const Poly& other);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  void toggle(Monomial m);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
// a + 1
Poly negate(const Poly& a);

using Substitution = std::map<std::string, Poly>;

// Simultaneous substitution; unmapped variables stay as they are.
Poly substitute(const Poly& a, const Substitution& map);

// Throws UnboundVariable when the assignment misses a variable of `a`.
bool evaluate(const Poly& a, const Assignment& assignment);

// Polynomial syntax: '+' separates monomials, juxtaposition or '*' multiplies,
// '0'/'1' constants, parentheses, and a postfix prime meaning "+1". Variables
// are a letter followed by optional digits (p, q, x12). Throws SyntaxError.
Poly parse_poly(std::string_view text);

// 2x2 matrix of polynomials, entries row-major: (1,1),(1,2),(2,1),(2,2).
struct PolyMatrix2 {
  std::array<Poly, 4> entries;

  static PolyMatrix2 identity();
  const Poly& at(int row, int col) const { return entries[static_cast<std::size_t>(row * 2 + col)]; }
  friend bool operator==(const PolyMatrix2&, const PolyMatrix2&) = default;
};

PolyMatrix2 mat_mul(const PolyMatrix2& a, const PolyMatrix2& b);

// 2x2 bit matrix laid out rows-first from a 4-bit vector x1 x2 x3 x4.
struct BitMatrix2 {
  std::array<bool, 4> bits{};

  static BitMatrix2 from_string(std::string_view four_bits);
  std::string to_string() const;  // "1000"
  friend bool operator==(const BitMatrix2&, const BitMatrix2&) = default;
};

// Throws ArityError for non-binary operators.
BitMatrix2 op_matrix(OperatorId op);
// [[x4, x3], [x2, x1]]
BitMatrix2 mirror(const BitMatrix2& m);
BitMatrix2 complement(const BitMatrix2& m);
BitMatrix2 transpose(const BitMatrix2& m);

}  // namespace pbnf
