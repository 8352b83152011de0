#include "pbnf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <utility>

#include "pbnf/errors.hpp"

namespace pbnf {

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

Poly Poly::one() {
  Poly p;
  p.terms_.insert(Monomial{});
  return p;
}

Poly Poly::variable(std::string name) {
  Poly p;
  p.terms_.insert(Monomial{std::move(name)});
  return p;
}

Poly Poly::from_monomials(const std::vector<std::vector<std::string>>& monomials) {
  Poly p;
  for (auto m : monomials) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    p.toggle(std::move(m));
  }
  return p;
}

bool Poly::is_one() const { return terms_.size() == 1 && terms_.begin()->empty(); }

std::size_t Poly::degree() const { return terms_.empty() ? 0 : terms_.begin()->size(); }

std::vector<std::string> Poly::variables() const {
  std::set<std::string> vars;
  for (const auto& m : terms_) vars.insert(m.begin(), m.end());
  return {vars.begin(), vars.end()};
}

void Poly::toggle(Monomial m) {
  auto [it, inserted] = terms_.insert(std::move(m));
  if (!inserted) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& m : other.terms_) toggle(m);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  Poly product;
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      Monomial m;
      m.reserve(a.size() + b.size());
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
      product.toggle(std::move(m));
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

bool operator<(const Poly& a, const Poly& b) {
  return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                      b.terms_.end(), MonomialOrder{});
}

namespace {

bool is_short_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& m : terms_) {
    if (!out.empty()) out += '+';
    if (m.empty()) {
      out += '1';
      continue;
    }
    const bool juxtapose = std::all_of(m.begin(), m.end(), is_short_name);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i > 0 && !juxtapose) out += '*';
      out += m[i];
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }
Poly negate(const Poly& a) { return a + Poly::one(); }

Poly substitute(const Poly& a, const Substitution& map) {
  Poly result;
  for (const auto& m : a.terms()) {
    Poly term = Poly::one();
    for (const auto& v : m) {
      auto it = map.find(v);
      term *= it == map.end() ? Poly::variable(v) : it->second;
    }
    result += term;
  }
  return result;
}

bool evaluate(const Poly& a, const Assignment& assignment) {
  bool sum = false;
  for (const auto& m : a.terms()) {
    bool product = true;
    for (const auto& v : m) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw UnboundVariable(v);
      product = product && it->second;
    }
    sum ^= product;
  }
  return sum;
}

// ---------------------------------------------------------------------------

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse_all() {
    Poly p = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_factor_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == '0' || c == '1' || std::isalpha(static_cast<unsigned char>(c));
  }

  Poly parse_sum() {
    Poly sum = parse_product();
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == '+') {
      ++pos_;
      sum += parse_product();
      skip_space();
    }
    return sum;
  }

  Poly parse_product() {
    Poly product = parse_factor();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        product *= parse_factor();
      } else if (at_factor_start()) {
        product *= parse_factor();
      } else {
        return product;
      }
    }
  }

  Poly parse_factor() {
    Poly f = parse_atom();
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == '\'') {
      ++pos_;
      f = negate(f);
      skip_space();
    }
    return f;
  }

  Poly parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = parse_sum();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return Poly::constant(c == '1');
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      Poly v = Poly::variable(std::string(text_.substr(pos_, end - pos_)));
      pos_ = end;
      return v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse_all(); }

// ---------------------------------------------------------------------------

PolyMatrix2 PolyMatrix2::identity() {
  return {{Poly::one(), Poly::zero(), Poly::zero(), Poly::one()}};
}

PolyMatrix2 mat_mul(const PolyMatrix2& a, const PolyMatrix2& b) {
  PolyMatrix2 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.entries[static_cast<std::size_t>(i * 2 + j)] = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
    }
  }
  return out;
}

BitMatrix2 BitMatrix2::from_string(std::string_view four_bits) {
  if (four_bits.size() != 4) throw LengthMismatch("bit matrix needs exactly 4 bits");
  BitMatrix2 m;
  for (std::size_t i = 0; i < 4; ++i) {
    if (four_bits[i] != '0' && four_bits[i] != '1') throw SyntaxError("expected bit", i);
    m.bits[i] = four_bits[i] == '1';
  }
  return m;
}

std::string BitMatrix2::to_string() const {
  std::string s;
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

BitMatrix2 op_matrix(OperatorId op) {
  if (arity(op) != 2) throw ArityError(std::string(name(op)) + " is not a binary operator");
  return BitMatrix2::from_string(info(op).truth);
}

BitMatrix2 mirror(const BitMatrix2& m) {
  return {{m.bits[3], m.bits[2], m.bits[1], m.bits[0]}};
}

BitMatrix2 complement(const BitMatrix2& m) {
  return {{!m.bits[0], !m.bits[1], !m.bits[2], !m.bits[3]}};
}

BitMatrix2 transpose(const BitMatrix2& m) {
  return {{m.bits[0], m.bits[2], m.bits[1], m.bits[3]}};
}

}  // namespace pbnf
