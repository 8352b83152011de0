#include "pbnf/semantics.hpp"

#include <algorithm>
#include <utility>

#include "pbnf/errors.hpp"

namespace pbnf {

TruthVector::TruthVector(std::vector<std::string> vars, std::vector<bool> bits)
    : vars_(std::move(vars)), bits_(std::move(bits)) {
  if (vars_.size() > kMaxVectorVariables) {
    throw BoundExceeded("truth vectors are limited to " + std::to_string(kMaxVectorVariables) +
                        " variables");
  }
  if (bits_.size() != (std::size_t{1} << vars_.size())) {
    throw LengthMismatch("truth vector over " + std::to_string(vars_.size()) +
                         " variables needs " + std::to_string(std::size_t{1} << vars_.size()) +
                         " bits, got " + std::to_string(bits_.size()));
  }
}

TruthVector TruthVector::from_string(std::string_view bits, std::vector<std::string> vars) {
  std::vector<bool> out;
  out.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw SyntaxError("expected '0' or '1'", i);
    out.push_back(bits[i] == '1');
  }
  return TruthVector(std::move(vars), std::move(out));
}

TruthVector TruthVector::from_string(std::string_view bits) {
  switch (bits.size()) {
    case 1:
      return from_string(bits, {});
    case 2:
      return from_string(bits, {"p"});
    case 4:
      return from_string(bits, {"p", "q"});
    case 8:
      return from_string(bits, {"p", "q", "r"});
    default:
      throw LengthMismatch("cannot infer variables for a vector of length " +
                           std::to_string(bits.size()));
  }
}

bool TruthVector::all_ones() const {
  return std::all_of(bits_.begin(), bits_.end(), [](bool b) { return b; });
}

bool TruthVector::all_zeros() const {
  return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; });
}

std::string TruthVector::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s += b ? '1' : '0';
  return s;
}

std::strong_ordering operator<=>(const TruthVector& a, const TruthVector& b) {
  if (auto c = a.vars_ <=> b.vars_; c != 0) return c;
  if (a.bits_ == b.bits_) return std::strong_ordering::equal;
  return a.bits_ < b.bits_ ? std::strong_ordering::less : std::strong_ordering::greater;
}

Assignment row_assignment(const std::vector<std::string>& vars, std::size_t row) {
  Assignment a;
  const std::size_t n = vars.size();
  for (std::size_t j = 0; j < n; ++j) {
    a[vars[j]] = ((row >> (n - 1 - j)) & 1U) == 0;
  }
  return a;
}

bool eval_formula(const Formula& f, const Assignment& assignment) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = assignment.find(f.name());
      if (it == assignment.end()) throw UnboundVariable(f.name());
      return it->second;
    }
    case Formula::Kind::Constant:
      return f.value();
    case Formula::Kind::Unary: {
      // Truth string is indexed by row: value 1 first, then 0.
      const bool x = eval_formula(f.children()[0], assignment);
      return info(f.op()).truth[x ? 0 : 1] == '1';
    }
    case Formula::Kind::Binary: {
      const bool x = eval_formula(f.children()[0], assignment);
      const bool y = eval_formula(f.children()[1], assignment);
      const std::size_t row = (x ? 0U : 2U) + (y ? 0U : 1U);
      return info(f.op()).truth[row] == '1';
    }
  }
  return false;
}

TruthVector truth_vector(const Formula& f) { return truth_vector(f, letters(f)); }

TruthVector truth_vector(const Formula& f, const std::vector<std::string>& vars) {
  if (vars.size() > kMaxVectorVariables) throw BoundExceeded("too many variables for a truth vector");
  std::vector<bool> bits(std::size_t{1} << vars.size());
  for (std::size_t row = 0; row < bits.size(); ++row) {
    bits[row] = eval_formula(f, row_assignment(vars, row));
  }
  return TruthVector(vars, std::move(bits));
}

TruthVector poly_to_vector(const Poly& a, const std::vector<std::string>& vars) {
  if (vars.size() > kMaxVectorVariables) throw BoundExceeded("too many variables for a truth vector");
  std::vector<bool> bits(std::size_t{1} << vars.size());
  for (std::size_t row = 0; row < bits.size(); ++row) {
    bits[row] = evaluate(a, row_assignment(vars, row));
  }
  return TruthVector(vars, std::move(bits));
}

Poly vector_to_poly(const TruthVector& v) {
  const std::size_t n = v.arity();
  const std::size_t rows = v.size();
  const std::size_t all = rows - 1;
  // Re-index by assignment mask (bit n-1-j set <=> variable j is 1): the
  // row index is the complement of the mask.
  std::vector<std::uint8_t> coeff(rows);
  for (std::size_t mask = 0; mask < rows; ++mask) coeff[mask] = v[all ^ mask] ? 1 : 0;
  // In-place Mobius transform: coeff[S] = XOR of f(T) over T subset of S.
  for (std::size_t bit = 1; bit < rows; bit <<= 1) {
    for (std::size_t mask = 0; mask < rows; ++mask) {
      if (mask & bit) coeff[mask] ^= coeff[mask ^ bit];
    }
  }
  std::vector<std::vector<std::string>> monomials;
  for (std::size_t mask = 0; mask < rows; ++mask) {
    if (!coeff[mask]) continue;
    std::vector<std::string> m;
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> (n - 1 - j)) & 1U) m.push_back(v.vars()[j]);
    }
    monomials.push_back(std::move(m));
  }
  return Poly::from_monomials(monomials);
}

namespace {

void require_same_length(const TruthVector& v, const TruthVector& w) {
  if (v.size() != w.size()) {
    throw LengthMismatch("vector lengths differ: " + std::to_string(v.size()) + " vs " +
                         std::to_string(w.size()));
  }
}

template <typename Fn>
TruthVector zip(const TruthVector& v, const TruthVector& w, Fn fn) {
  require_same_length(v, w);
  std::vector<bool> bits(v.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = fn(v[i], w[i]);
  return TruthVector(v.vars(), std::move(bits));
}

}  // namespace

TruthVector bitwise_add(const TruthVector& v, const TruthVector& w) {
  return zip(v, w, [](bool a, bool b) { return a != b; });
}

TruthVector bitwise_mul(const TruthVector& v, const TruthVector& w) {
  return zip(v, w, [](bool a, bool b) { return a && b; });
}

TruthVector complement(const TruthVector& v) {
  std::vector<bool> bits(v.bits());
  bits.flip();
  return TruthVector(v.vars(), std::move(bits));
}

TruthVector mirror(const TruthVector& v) {
  std::vector<bool> bits(v.bits().rbegin(), v.bits().rend());
  return TruthVector(v.vars(), std::move(bits));
}

}  // namespace pbnf
