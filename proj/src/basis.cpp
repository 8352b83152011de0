#include "pbnf/basis.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "pbnf/families.hpp"
#include "pbnf/transform.hpp"

namespace pbnf {
namespace {

// Binary functions of (p, q) as 4-bit values, row 0 in the high bit:
// p = 0b1100, q = 0b1010.
using Fn = unsigned;
constexpr Fn kP = 0b1100;
constexpr Fn kQ = 0b1010;
constexpr Fn kAll = 0b1111;

bool row_bit(Fn f, unsigned row) { return (f >> (3 - row)) & 1U; }

Fn apply_op(OperatorId op, const std::vector<Fn>& args) {
  const std::string_view truth = info(op).truth;
  Fn out = 0;
  for (unsigned row = 0; row < 4; ++row) {
    std::size_t index = 0;
    if (args.size() == 1) {
      index = row_bit(args[0], row) ? 0 : 1;
    } else if (args.size() == 2) {
      index = (row_bit(args[0], row) ? 0 : 2) + (row_bit(args[1], row) ? 0 : 1);
    }
    out = (out << 1) | (truth[index] == '1' ? 1U : 0U);
  }
  return out;
}

TruthVector to_vector(Fn f) {
  std::vector<bool> bits(4);
  for (unsigned row = 0; row < 4; ++row) bits[row] = row_bit(f, row);
  return TruthVector({"p", "q"}, std::move(bits));
}

struct Candidate {
  Formula expr;
  std::string text;
  std::size_t depth;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.text.size() != b.text.size()) return a.text.size() < b.text.size();
  return a.text < b.text;
}

void offer(std::optional<Candidate>& slot, Formula expr, std::size_t depth) {
  Candidate c{expr, print(expr), depth};
  if (!slot || better(c, *slot)) slot = std::move(c);
}

}  // namespace

std::vector<TruthVector> ClosureResult::reached() const {
  std::vector<TruthVector> out;
  for (const auto& [v, w] : witnesses) out.push_back(v);
  return out;
}

ClosureResult closure(const std::set<OperatorId>& ops, bool include_constants) {
  std::array<std::optional<Candidate>, 16> reached;
  offer(reached[kP], Formula::atom("p"), 0);
  offer(reached[kQ], Formula::atom("q"), 0);
  for (OperatorId op : ops) {
    if (arity(op) == 0) offer(reached[op == OperatorId::True ? kAll : 0], Formula::apply(op, {}), 0);
  }
  if (include_constants) {
    offer(reached[kAll], Formula::constant(true), 0);
    offer(reached[0], Formula::constant(false), 0);
  }

  std::size_t generation = 0;
  for (std::size_t round = 1;; ++round) {
    std::vector<Fn> known;
    for (Fn f = 0; f < 16; ++f) {
      if (reached[f]) known.push_back(f);
    }
    std::array<std::optional<Candidate>, 16> fresh;
    for (OperatorId op : ops) {
      const int n = arity(op);
      if (n == 1) {
        for (Fn x : known) {
          const Fn y = apply_op(op, {x});
          if (!reached[y]) offer(fresh[y], Formula::unary(op, reached[x]->expr), round);
        }
      } else if (n == 2) {
        for (Fn x : known) {
          for (Fn z : known) {
            const Fn y = apply_op(op, {x, z});
            if (!reached[y]) offer(fresh[y], Formula::binary(op, reached[x]->expr, reached[z]->expr), round);
          }
        }
      }
    }
    bool grew = false;
    for (Fn f = 0; f < 16; ++f) {
      if (fresh[f]) {
        reached[f] = std::move(fresh[f]);
        grew = true;
      }
    }
    if (!grew) break;
    generation = round;
  }

  ClosureResult result;
  result.ops = ops;
  result.include_constants = include_constants;
  result.generation = generation;
  for (Fn f = 0; f < 16; ++f) {
    if (reached[f]) result.witnesses.emplace(to_vector(f), Witness{reached[f]->expr, reached[f]->depth});
  }
  result.complete = result.witnesses.size() == 16;
  return result;
}

bool is_complete(const std::set<OperatorId>& ops, bool include_constants) {
  return closure(ops, include_constants).complete;
}

std::vector<TruthVector> which_missing(const std::set<OperatorId>& ops, bool include_constants) {
  const ClosureResult result = closure(ops, include_constants);
  std::vector<TruthVector> missing;
  for (Fn f = 0; f < 16; ++f) {
    TruthVector v = to_vector(f);
    if (!result.contains(v)) missing.push_back(std::move(v));
  }
  return missing;
}

Poly diagonal_poly(OperatorId op) {
  return substitute(op_poly(op, Family::Normal), {{"q", Poly::variable("p")}});
}

bool self_negation_test(OperatorId op) {
  if (arity(op) != 2) return false;
  if (op_poly(op, Family::Normal).variables().size() != 2) return false;
  return diagonal_poly(op) == negate(Poly::variable("p"));
}

namespace {

Formula synthesize_vector(const TruthVector& target, const std::set<OperatorId>& allowed,
                          std::size_t depth_cap, bool include_constants) {
  if (allowed.empty()) throw Error("synthesize needs at least one allowed connective");
  const ClosureResult result = closure(allowed, include_constants);
  auto it = result.witnesses.find(target);
  if (it == result.witnesses.end()) {
    throw Unreachable("target " + target.to_string() + " is outside the closure of the basis",
                      Unreachable::Reason::IncompleteBasis, std::nullopt);
  }
  if (it->second.depth > depth_cap) {
    throw Unreachable("target " + target.to_string() + " needs depth " +
                          std::to_string(it->second.depth) + " > cap " + std::to_string(depth_cap),
                      Unreachable::Reason::DepthCapped, it->second.depth);
  }
  return it->second.expression;
}

void require_pq(const std::vector<std::string>& vars) {
  for (const auto& v : vars) {
    if (v != "p" && v != "q") throw BoundExceeded("synthesis targets may only use the letters p and q");
  }
}

}  // namespace

Formula synthesize(const Formula& target, const std::set<OperatorId>& allowed, std::size_t depth_cap,
                   bool include_constants) {
  require_pq(letters(target));
  return synthesize(pbnf(target), allowed, depth_cap, include_constants);
}

Formula synthesize(const Poly& target, const std::set<OperatorId>& allowed, std::size_t depth_cap,
                   bool include_constants) {
  require_pq(target.variables());
  return synthesize_vector(poly_to_vector(target, {"p", "q"}), allowed, depth_cap, include_constants);
}

}  // namespace pbnf
