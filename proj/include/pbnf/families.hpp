#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pbnf/formula.hpp"
#include "pbnf/operators.hpp"
#include "pbnf/poly.hpp"
#include "pbnf/semantics.hpp"

namespace pbnf {

// The four dual encodings ("House of PBNF").
//
//   Normal              g(p,q,1)    the polynomial itself
//   Complement          g(p,q,0)    Normal + 1
//   Pullback            g(p',q',1)  every letter v replaced by v + 1
//   PullbackComplement  g(p',q',0)  Pullback + 1
//
// On truth vectors these are identity, bitwise complement, mirror and
// mirrored complement.
enum class Family { Normal, Complement, Pullback, PullbackComplement };

inline constexpr Family kFamilies[] = {Family::Normal, Family::Complement, Family::Pullback,
                                       Family::PullbackComplement};

// "normal", "complement", "pullback", "pullback-complement"
std::string_view family_name(Family fam);
// "g(p,q,1)" etc.
std::string_view family_signature(Family fam);
// Throws UnknownName.
Family parse_family(std::string_view text);

// Whether the family reads 1 as true (Normal, Pullback) or 0 (the others).
bool reads_one_as_true(Family fam);
bool complements_output(Family fam);
bool complements_inputs(Family fam);

Poly to_family(const Poly& a, Family from, Family to);
TruthVector map_vector(const TruthVector& v, Family fam);

// Factored display form of a family polynomial, e.g. (p+1)(q+1)+1. A term is
// a product of literals v or (v+1); the template keeps factors unreduced so
// that the rows read like the published tables.
struct Literal {
  std::string var;
  bool complemented = false;
};

struct Template {
  std::vector<std::vector<Literal>> terms;
  bool plus_one = false;

  std::string to_string() const;
  Poly expand() const;
};

Template op_template(OperatorId op, Family fam);

// Operator polynomial in the letters p (and q). Constants give 0 or 1.
Poly op_poly(OperatorId op, Family fam);

struct Fiber {
  OperatorId op;       // binary operator with this polynomial
  bool degenerate;     // depends on at most one letter
  Formula statement;   // simplest statement: op(p,q), or a letter/negation/constant
  std::string note;
};

// Names the operator whose polynomial in `fam` is `a`. Letters other than
// p, q are renamed in sorted order to p, q. Throws BoundExceeded for more
// than two letters.
Fiber fiber(const Poly& a, Family fam);

struct FamilyRow {
  std::string statement;  // unicode, e.g. "p ∨ q"
  OperatorId op;
  std::string template_text;
  Poly reduced;

  // "(p+1)(q+1)+1 [= pq+p+q]" or just "pq" when already reduced.
  std::string display() const;
};

// The 16 binary operators in table order followed by the four singular ones.
std::vector<FamilyRow> family_table(Family fam);

}  // namespace pbnf
