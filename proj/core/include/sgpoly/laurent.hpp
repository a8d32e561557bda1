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

#ifndef SGPOLY_LAURENT_HPP
#define SGPOLY_LAURENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace sgpoly {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z[A, A^-1].  Term map never stores a zero coefficient, so
/// equality of values is equality of maps.  Immutable in spirit: all
/// arithmetic returns new values and sharing across threads is safe.
class LaurentPolynomial {
 public:
  using TermMap = std::map<int, BigInt>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(BigInt constant);
  LaurentPolynomial(BigInt coeff, int exponent);

  static LaurentPolynomial zero() { return LaurentPolynomial(); }
  static LaurentPolynomial one() { return LaurentPolynomial(BigInt(1)); }
  /// The monomial c * A^e.
  static LaurentPolynomial monomial(BigInt c, int e) { return {std::move(c), e}; }
  /// (-A^2 - A^-2), the loop value of the bracket.
  static LaurentPolynomial loop_value();
  /// phi = A^2 + A^-2.
  static LaurentPolynomial phi();

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  BigInt coefficient(int exponent) const;
  /// Highest/lowest exponent; invalid on the zero polynomial.
  int max_exponent() const;
  int min_exponent() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial operator+(const LaurentPolynomial& rhs) const;
  LaurentPolynomial operator-(const LaurentPolynomial& rhs) const;
  LaurentPolynomial operator*(const LaurentPolynomial& rhs) const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
  bool operator==(const LaurentPolynomial& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const LaurentPolynomial& rhs) const { return !(*this == rhs); }

  /// Multiply by c * A^e in place.
  void scale(const BigInt& c, int e);

  /// Substitute A -> A^k (ring homomorphism).  k must be nonzero.
  LaurentPolynomial substitute_power(int k) const;

  /// Integer power, n >= 0.
  LaurentPolynomial pow(unsigned n) const;

  /// Exact division; returns nullopt when the divisor does not divide.
  std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& divisor) const;

  /// Whether rhs == (-A)^k * this for some integer k; reports the witness.
  /// Zero polynomials are unit equivalent with k = 0.
  std::optional<int> unit_shift_to(const LaurentPolynomial& rhs) const;

  /// Canonical text form, decreasing exponents: "-A^8-A^5+A^4+...+A^-8".
  std::string to_string() const;
  static LaurentPolynomial from_string(const std::string& text);

  /// Accumulate c * A^e, dropping the term if it cancels.
  void add_term(int exponent, const BigInt& c);

 private:
  TermMap terms_;
};

LaurentPolynomial operator*(const BigInt& c, const LaurentPolynomial& p);

}  // namespace sgpoly

#endif  // SGPOLY_LAURENT_HPP
