#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "pbnf/errors.hpp"
#include "pbnf/formula.hpp"
#include "pbnf/operators.hpp"
#include "pbnf/poly.hpp"
#include "pbnf/semantics.hpp"

namespace pbnf {

struct Witness {
  Formula expression;  // over the allowed connectives and the letters p, q
  std::size_t depth;
};

// Clone closure over two letters: every binary function reachable by
// composing the generators, starting from the projections p and q.
struct ClosureResult {
  std::set<OperatorId> ops;
  bool include_constants = false;
  std::map<TruthVector, Witness> witnesses;  // keyed by vector over (p, q)
  bool complete = false;                     // all 16 binary functions reached
  std::size_t generation = 0;                // BFS rounds until the fixpoint

  std::vector<TruthVector> reached() const;
  bool contains(const TruthVector& v) const { return witnesses.count(v) > 0; }
};

// Deterministic BFS: round k applies every generator to tuples of functions
// reached by round k-1, so a function first seen in round k has a witness of
// minimal depth k. Ties go to the shortest, then lexicographically smallest,
// ascii rendering. `include_constants` seeds 0 and 1 next to p and q.
ClosureResult closure(const std::set<OperatorId>& ops, bool include_constants = false);

bool is_complete(const std::set<OperatorId>& ops, bool include_constants = false);
std::vector<TruthVector> which_missing(const std::set<OperatorId>& ops,
                                       bool include_constants = false);

// The operator applied to a repeated letter, op(p, p), in the Normal family.
Poly diagonal_poly(OperatorId op);

// True for genuinely binary operators whose diagonal op(p, p) is the
// negation p+1. Degenerate operators (depending on one letter or none) are
// excluded: NPROJ_P is already ¬p rather than a connective that yields it.
bool self_negation_test(OperatorId op);

// Why synthesis failed.
class Unreachable : public Error {
 public:
  enum class Reason { IncompleteBasis, DepthCapped };
  Unreachable(const std::string& message, Reason reason, std::optional<std::size_t> needed_depth)
      : Error(message), reason_(reason), needed_depth_(needed_depth) {}
  Reason reason() const noexcept { return reason_; }
  // Depth of the minimal witness when the cap was the obstacle.
  std::optional<std::size_t> needed_depth() const noexcept { return needed_depth_; }

 private:
  Reason reason_;
  std::optional<std::size_t> needed_depth_;
};

// Minimal-depth statement over `allowed` and the letters p, q with the same
// canonical polynomial as the target. The target may only mention p and q.
Formula synthesize(const Formula& target, const std::set<OperatorId>& allowed, std::size_t depth_cap,
                   bool include_constants = false);
Formula synthesize(const Poly& target, const std::set<OperatorId>& allowed, std::size_t depth_cap,
                   bool include_constants = false);

}  // namespace pbnf
