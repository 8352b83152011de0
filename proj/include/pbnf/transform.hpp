#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pbnf/families.hpp"
#include "pbnf/formula.hpp"
#include "pbnf/poly.hpp"

namespace pbnf {

// Compiles a statement to its polynomial in the requested family. Children
// are substituted into the Normal template of each connective bottom-up and
// the family transform is applied once at the root.
Poly pbnf(const Formula& f, Family fam = Family::Normal);

enum class VerdictClass { Tautology, Contradiction, Contingent };

std::string_view class_name(VerdictClass c);

struct Verdict {
  VerdictClass cls;
  // Assignments over letters(f); present whenever one exists.
  std::optional<Assignment> falsifying;
  std::optional<Assignment> satisfying;
  Poly polynomial;  // in `family`
  Family family;
  std::vector<std::string> letters;
};

Verdict classify(const Formula& f, Family fam = Family::Normal);

struct Equivalence {
  bool equivalent;
  std::optional<Assignment> witness;  // where the two statements differ
  Poly left;
  Poly right;
  std::vector<std::string> letters;
};

Equivalence equivalent(const Formula& f, const Formula& g);

struct EqualCondition {
  std::vector<std::string> letters;
  std::vector<Assignment> solutions;  // in row order
  Poly difference;                    // pbnf(f) + pbnf(g); solutions are its zeros
  std::string description;            // e.g. "p = q"
};

// Throws BoundExceeded when the two statements mention more than
// `max_letters` letters together.
EqualCondition equal_condition(const Formula& f, const Formula& g, std::size_t max_letters = 10);

struct TraceStep {
  std::string statement;  // ascii rendering of the sub-statement
  std::string rule;       // template or transform applied
  std::vector<std::pair<std::string, Poly>> substitution;
  Poly result;
  std::string note;
};

std::vector<TraceStep> proof_trace(const Formula& f, Family fam = Family::Normal);

// A point where `a` evaluates to 1, chosen algebraically: the variables of
// a minimal-degree monomial set to 1, all others to 0. nullopt iff a == 0.
std::optional<Assignment> satisfying_assignment(const Poly& a, const std::vector<std::string>& vars);

// "p=1 q=0" in the order of `vars`.
std::string format_assignment(const Assignment& a, const std::vector<std::string>& vars);

}  // namespace pbnf
