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

#ifndef SGPOLY_PHI_FRACTION_HPP
#define SGPOLY_PHI_FRACTION_HPP

#include <string>

#include "sgpoly/laurent.hpp"

namespace sgpoly {

/// num / phi^k with phi = A^2 + A^-2 and k >= 0.  Canonical form: when
/// k > 0, phi does not divide num (reduced on construction), so two values
/// are equal iff their fields are equal; equality is still implemented by
/// cross multiplication, which is the defining relation.
class PhiFraction {
 public:
  PhiFraction() = default;
  PhiFraction(LaurentPolynomial num, unsigned phi_power);
  /* implicit */ PhiFraction(LaurentPolynomial poly) : PhiFraction(std::move(poly), 0) {}

  static PhiFraction zero() { return PhiFraction(); }
  static PhiFraction one() { return PhiFraction(LaurentPolynomial::one(), 0); }
  /// 1 / phi^k.
  static PhiFraction phi_inverse(unsigned k) { return {LaurentPolynomial::one(), k}; }

  const LaurentPolynomial& num() const { return num_; }
  unsigned phi_power() const { return k_; }
  bool is_zero() const { return num_.is_zero(); }

  PhiFraction operator-() const;
  PhiFraction operator+(const PhiFraction& rhs) const;
  PhiFraction operator-(const PhiFraction& rhs) const;
  PhiFraction operator*(const PhiFraction& rhs) const;
  PhiFraction& operator+=(const PhiFraction& rhs);
  bool operator==(const PhiFraction& rhs) const;
  bool operator!=(const PhiFraction& rhs) const { return !(*this == rhs); }

  /// Multiply by the monomial c * A^e.
  PhiFraction scaled(const BigInt& c, int e) const;
  /// Substitute A -> A^k in numerator and denominator; phi maps to
  /// A^2k + A^-2k which is no longer a phi power, so the result is returned
  /// as an explicit pair via cross-multiplied polynomial only when needed.
  /// Provided for completeness of the A -> A^-1 mirror case (k = -1, which
  /// fixes phi).
  PhiFraction substitute_mirror() const;

  /// If the value is integral (k reduces to 0), the polynomial itself.
  std::optional<LaurentPolynomial> as_polynomial() const;

  /// Whether rhs == (-A^4)^k * this for some integer k; reports the witness.
  std::optional<int> unit4_shift_to(const PhiFraction& rhs) const;

  /// "p" or "(p)/phi^k".
  std::string to_string() const;

 private:
  void reduce();

  LaurentPolynomial num_;
  unsigned k_ = 0;
};

}  // namespace sgpoly

#endif  // SGPOLY_PHI_FRACTION_HPP
