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

#include "sgpoly/phi_fraction.hpp"

namespace sgpoly {

PhiFraction::PhiFraction(LaurentPolynomial num, unsigned phi_power)
    : num_(std::move(num)), k_(phi_power) {
  reduce();
}

void PhiFraction::reduce() {
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  const LaurentPolynomial phi = LaurentPolynomial::phi();
  while (k_ > 0) {
    auto q = num_.divide_exact(phi);
    if (!q) break;
    num_ = std::move(*q);
    --k_;
  }
}

PhiFraction PhiFraction::operator-() const {
  PhiFraction out(*this);
  out.num_ = -out.num_;
  return out;
}

PhiFraction PhiFraction::operator+(const PhiFraction& rhs) const {
  const unsigned k = std::max(k_, rhs.k_);
  const LaurentPolynomial phi = LaurentPolynomial::phi();
  LaurentPolynomial n = num_ * phi.pow(k - k_) + rhs.num_ * phi.pow(k - rhs.k_);
  return PhiFraction(std::move(n), k);
}

PhiFraction& PhiFraction::operator+=(const PhiFraction& rhs) {
  *this = *this + rhs;
  return *this;
}

PhiFraction PhiFraction::operator-(const PhiFraction& rhs) const { return *this + (-rhs); }

PhiFraction PhiFraction::operator*(const PhiFraction& rhs) const {
  return PhiFraction(num_ * rhs.num_, k_ + rhs.k_);
}

bool PhiFraction::operator==(const PhiFraction& rhs) const {
  const LaurentPolynomial phi = LaurentPolynomial::phi();
  return num_ * phi.pow(rhs.k_) == rhs.num_ * phi.pow(k_);
}

PhiFraction PhiFraction::scaled(const BigInt& c, int e) const {
  PhiFraction out(*this);
  out.num_.scale(c, e);
  return out;
}

PhiFraction PhiFraction::substitute_mirror() const {
  // A -> A^-1 fixes phi, so the denominator survives unchanged.
  return PhiFraction(num_.substitute_power(-1), k_);
}

std::optional<LaurentPolynomial> PhiFraction::as_polynomial() const {
  if (k_ == 0) return num_;
  return std::nullopt;
}

std::optional<int> PhiFraction::unit4_shift_to(const PhiFraction& rhs) const {
  if (is_zero() && rhs.is_zero()) return 0;
  if (is_zero() || rhs.is_zero()) return std::nullopt;
  // Cross-multiplied, rhs == (-A^4)^k * this pins 4k by top exponents.
  const LaurentPolynomial phi = LaurentPolynomial::phi();
  LaurentPolynomial lhs_x = num_ * phi.pow(rhs.k_);
  LaurentPolynomial rhs_x = rhs.num_ * phi.pow(k_);
  const int diff = rhs_x.max_exponent() - lhs_x.max_exponent();
  if (diff % 4 != 0) return std::nullopt;
  const int k = diff / 4;
  lhs_x.scale((k % 2 == 0) ? BigInt(1) : BigInt(-1), diff);
  if (lhs_x == rhs_x) return k;
  return std::nullopt;
}

std::string PhiFraction::to_string() const {
  if (k_ == 0) return num_.to_string();
  std::string s = "(" + num_.to_string() + ")/phi";
  if (k_ > 1) s += "^" + std::to_string(k_);
  return s;
}

}  // namespace sgpoly
