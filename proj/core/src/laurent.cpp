// Copyright 2026 The sgpoly authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sgpoly/laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace sgpoly {

LaurentPolynomial::LaurentPolynomial(BigInt constant) {
  if (constant != 0) terms_[0] = std::move(constant);
}

LaurentPolynomial::LaurentPolynomial(BigInt coeff, int exponent) {
  if (coeff != 0) terms_[exponent] = std::move(coeff);
}

LaurentPolynomial LaurentPolynomial::loop_value() {
  LaurentPolynomial d;
  d.terms_[2] = -1;
  d.terms_[-2] = -1;
  return d;
}

LaurentPolynomial LaurentPolynomial::phi() {
  LaurentPolynomial p;
  p.terms_[2] = 1;
  p.terms_[-2] = 1;
  return p;
}

BigInt LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

void LaurentPolynomial::add_term(int exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& rhs) const {
  LaurentPolynomial out(*this);
  out += rhs;
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& rhs) const {
  LaurentPolynomial out(*this);
  out -= rhs;
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& rhs) const {
  LaurentPolynomial out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

void LaurentPolynomial::scale(const BigInt& c, int e) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  TermMap scaled;
  for (const auto& [exp, coeff] : terms_) scaled[exp + e] = coeff * c;
  terms_ = std::move(scaled);
}

LaurentPolynomial operator*(const BigInt& c, const LaurentPolynomial& p) {
  LaurentPolynomial out(p);
  out.scale(c, 0);
  return out;
}

LaurentPolynomial LaurentPolynomial::substitute_power(int k) const {
  if (k == 0) throw std::invalid_argument("substitute_power: k must be nonzero");
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_[e * k] = c;
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned n) const {
  LaurentPolynomial result = one();
  LaurentPolynomial base(*this);
  while (n > 0) {
    if (n & 1u) result *= base;
    base *= base;
    n >>= 1u;
  }
  return result;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_exact(
    const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (is_zero()) return zero();
  // Long division on the top terms; exponent bookkeeping handles the
  // Laurent shift implicitly.  An exact quotient q satisfies
  // min_exp(q) = min_exp(p) - min_exp(d), which bounds the loop.
  LaurentPolynomial rem(*this);
  LaurentPolynomial quot;
  const int dlead = divisor.max_exponent();
  const int qe_min = min_exponent() - divisor.min_exponent();
  const BigInt& dc = divisor.terms().rbegin()->second;
  while (!rem.is_zero()) {
    const int rlead = rem.max_exponent();
    const BigInt& rc = rem.terms().rbegin()->second;
    const int qe = rlead - dlead;
    if (qe < qe_min || rc % dc != 0) return std::nullopt;
    BigInt q = rc / dc;
    quot.add_term(qe, q);
    LaurentPolynomial sub(divisor);
    sub.scale(q, qe);
    rem -= sub;
  }
  return quot;
}

std::optional<int> LaurentPolynomial::unit_shift_to(const LaurentPolynomial& rhs) const {
  if (is_zero() && rhs.is_zero()) return 0;
  if (is_zero() || rhs.is_zero()) return std::nullopt;
  const int k = rhs.max_exponent() - max_exponent();
  // q == (-A)^k p forces the exponent shift k; only the sign remains to check.
  LaurentPolynomial shifted(*this);
  shifted.scale((k % 2 == 0) ? BigInt(1) : BigInt(-1), k);
  if (shifted == rhs) return k;
  return std::nullopt;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt abs = c < 0 ? BigInt(-c) : c;
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    if (abs != 1 || e == 0) os << abs.str();
    if (e != 0) {
      if (abs != 1) os << '*';
      os << 'A';
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return s[i];
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) + ": " +
                                what);
  }
  BigInt parse_uint() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected digits");
    BigInt v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return v;
  }
  int parse_int() {
    skip_ws();
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -1;
      ++i;
    }
    BigInt v = parse_uint();
    if (v > 1000000) fail("exponent out of range");
    return sign * static_cast<int>(v);
  }
};

}  // namespace

LaurentPolynomial LaurentPolynomial::from_string(const std::string& text) {
  LaurentPolynomial out;
  Parser p(text);
  if (p.eof()) p.fail("empty input");
  bool first = true;
  while (!p.eof()) {
    int sign = 1;
    char c = p.peek();
    if (c == '+' || c == '-') {
      sign = (c == '-') ? -1 : 1;
      ++p.i;
    } else if (!first) {
      p.fail("expected + or - between terms");
    }
    first = false;
    p.skip_ws();
    BigInt coeff = 1;
    bool saw_number = false;
    if (p.i < p.s.size() && std::isdigit(static_cast<unsigned char>(p.s[p.i]))) {
      coeff = p.parse_uint();
      saw_number = true;
    }
    p.skip_ws();
    if (p.i < p.s.size() && p.s[p.i] == '*') ++p.i;
    p.skip_ws();
    int exponent = 0;
    if (p.i < p.s.size() && (p.s[p.i] == 'A' || p.s[p.i] == 'a')) {
      ++p.i;
      exponent = 1;
      p.skip_ws();
      if (p.i < p.s.size() && p.s[p.i] == '^') {
        ++p.i;
        exponent = p.parse_int();
      }
    } else if (!saw_number) {
      p.fail("expected coefficient or A");
    }
    out.add_term(exponent, sign * coeff);
  }
  return out;
}

}  // namespace sgpoly
