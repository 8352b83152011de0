#pragma once

// Test-side reference semantics. Every connective is written out as a C++
// boolean expression so nothing here reads the library's truth strings.

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbnf/formula.hpp"
#include "pbnf/operators.hpp"
#include "pbnf/poly.hpp"

namespace oracle {

using pbnf::Formula;
using pbnf::OperatorId;

inline bool apply2(OperatorId op, bool a, bool b) {
  switch (op) {
    case OperatorId::And: return a && b;
    case OperatorId::Or: return a || b;
    case OperatorId::Imp: return !a || b;
    case OperatorId::ConvImp: return a || !b;
    case OperatorId::NImp: return a && !b;
    case OperatorId::NConvImp: return !a && b;
    case OperatorId::Iff: return a == b;
    case OperatorId::Xor: return a != b;
    case OperatorId::Nand: return !(a && b);
    case OperatorId::Nor: return !(a || b);
    case OperatorId::ProjP: return a;
    case OperatorId::ProjQ: return b;
    case OperatorId::NProjP: return !a;
    case OperatorId::NProjQ: return !b;
    case OperatorId::Top: return true;
    case OperatorId::Bot: return false;
    default: throw std::logic_error("not binary");
  }
}

inline bool apply1(OperatorId op, bool a) {
  switch (op) {
    case OperatorId::Id: return a;
    case OperatorId::Lower: return false;
    case OperatorId::Neg: return !a;
    case OperatorId::Raise: return true;
    default: throw std::logic_error("not unary");
  }
}

inline bool eval(const Formula& f, const std::map<std::string, bool>& env) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return env.at(f.name());
    case Formula::Kind::Constant: return f.value();
    case Formula::Kind::Unary: return apply1(f.op(), eval(f.children()[0], env));
    case Formula::Kind::Binary:
      return apply2(f.op(), eval(f.children()[0], env), eval(f.children()[1], env));
  }
  return false;
}

// Sum over monomials, each the AND of its variables.
inline bool eval_poly(const pbnf::Poly& a, const std::map<std::string, bool>& env) {
  bool acc = false;
  for (const auto& m : a.terms()) {
    bool term = true;
    for (const auto& v : m) term = term && env.at(v);
    acc = acc != term;
  }
  return acc;
}

// All assignments of `vars`, first variable most significant, 1 before 0.
inline std::vector<std::map<std::string, bool>> rows(const std::vector<std::string>& vars) {
  std::vector<std::map<std::string, bool>> out;
  const std::size_t n = vars.size();
  for (std::size_t r = 0; r < (std::size_t{1} << n); ++r) {
    std::map<std::string, bool> env;
    for (std::size_t j = 0; j < n; ++j) env[vars[j]] = !((r >> (n - 1 - j)) & 1U);
    out.push_back(env);
  }
  return out;
}

inline const std::vector<OperatorId>& binary_ops() {
  static const std::vector<OperatorId> ops{
      OperatorId::And,  OperatorId::Or,     OperatorId::Imp,    OperatorId::ConvImp,
      OperatorId::NImp, OperatorId::NConvImp, OperatorId::Iff,  OperatorId::Xor,
      OperatorId::Nand, OperatorId::Nor,    OperatorId::ProjP,  OperatorId::ProjQ,
      OperatorId::NProjP, OperatorId::NProjQ, OperatorId::Top,  OperatorId::Bot};
  return ops;
}

inline const std::vector<OperatorId>& unary_ops() {
  static const std::vector<OperatorId> ops{OperatorId::Id, OperatorId::Lower, OperatorId::Neg,
                                           OperatorId::Raise};
  return ops;
}

class RandomFormula {
 public:
  explicit RandomFormula(std::uint32_t seed, std::size_t letters = 4) : rng_(seed) {
    static const char* names[] = {"p", "q", "r", "s", "t", "u"};
    for (std::size_t i = 0; i < letters; ++i) letters_.emplace_back(names[i]);
  }

  Formula operator()(int depth) {
    std::uniform_int_distribution<int> pick(0, 9);
    const int k = depth <= 0 ? 0 : pick(rng_);
    if (k == 0 || depth <= 0) {
      std::uniform_int_distribution<std::size_t> leaf(0, letters_.size() + 1);
      const std::size_t i = leaf(rng_);
      if (i < letters_.size()) return Formula::atom(letters_[i]);
      return Formula::constant(i == letters_.size());
    }
    if (k <= 2) {
      std::uniform_int_distribution<std::size_t> u(0, unary_ops().size() - 1);
      return Formula::unary(unary_ops()[u(rng_)], (*this)(depth - 1));
    }
    std::uniform_int_distribution<std::size_t> b(0, binary_ops().size() - 1);
    const OperatorId op = binary_ops()[b(rng_)];
    Formula left = (*this)(depth - 1);
    return Formula::binary(op, left, (*this)(depth - 1));
  }

  pbnf::Poly poly(std::size_t max_terms) {
    std::uniform_int_distribution<std::size_t> count(0, max_terms);
    std::bernoulli_distribution coin(0.5);
    pbnf::Poly out;
    const std::size_t n = count(rng_);
    for (std::size_t i = 0; i < n; ++i) {
      pbnf::Poly term = pbnf::Poly::one();
      for (const auto& v : letters_) {
        if (coin(rng_)) term *= pbnf::Poly::variable(v);
      }
      out += term;
    }
    return out;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
  std::vector<std::string> letters_;
};

}  // namespace oracle
