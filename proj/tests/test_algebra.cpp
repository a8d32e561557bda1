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

#include <doctest.h>

#include <random>

#include "sgpoly/laurent.hpp"
#include "sgpoly/phi_fraction.hpp"
#include "sgpoly/poly_json.hpp"

using namespace sgpoly;

namespace {

LaurentPolynomial P(const std::string& s) { return LaurentPolynomial::from_string(s); }

LaurentPolynomial random_poly(std::mt19937& rng, int max_terms = 6) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expo(-8, 8);
  std::uniform_int_distribution<int> coeff(-5, 5);
  LaurentPolynomial p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) p.add_term(expo(rng), coeff(rng));
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  CHECK(P("A+A^-1") + P("-A^-1") == P("A"));
  LaurentPolynomial p = P("A^3-2+A^-5");
  CHECK(p + LaurentPolynomial::zero() == p);
  CHECK(P("A^2+A^-2") + P("A^2+A^-2") == P("2A^2+2A^-2"));
  CHECK(LaurentPolynomial::phi().pow(3) == P("A^6+3A^2+3A^-2+A^-6"));
  CHECK(p * LaurentPolynomial::one() == p);
  CHECK(P("-A^3") * P("-A^3") == P("A^6"));
  CHECK((p - p).is_zero());
}

TEST_CASE("power substitution") {
  CHECK(P("A^3+2A+2A^-1+A^-3").substitute_power(4) == P("A^12+2A^4+2A^-4+A^-12"));
  LaurentPolynomial p = P("A^5-3A^2+7");
  CHECK(p.substitute_power(1) == p);
  CHECK(P("A+A^-1").substitute_power(-1) == P("A+A^-1"));
  CHECK_THROWS_AS(p.substitute_power(0), std::invalid_argument);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    LaurentPolynomial p = random_poly(rng), q = random_poly(rng);
    int k = 1 + static_cast<int>(rng() % 4);
    CHECK((p * q).substitute_power(k) == p.substitute_power(k) * q.substitute_power(k));
    CHECK((p + q).substitute_power(k) == p.substitute_power(k) + q.substitute_power(k));
  }
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    LaurentPolynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("unit equivalence witnesses") {
  LaurentPolynomial p = P("A^4-2A+1");
  LaurentPolynomial q(p);
  q.scale(1, 2);  // (-A)^2 p
  CHECK(p.unit_shift_to(q) == 2);
  CHECK(P("1").unit_shift_to(P("-A")) == 1);
  CHECK_FALSE(P("A+1").unit_shift_to(P("A-1")).has_value());
  CHECK(LaurentPolynomial::zero().unit_shift_to(LaurentPolynomial::zero()) == 0);
  LaurentPolynomial r(p);
  r.scale(-1, -3);  // (-A)^-3 p
  CHECK(p.unit_shift_to(r) == -3);
}

TEST_CASE("exact division") {
  LaurentPolynomial phi = LaurentPolynomial::phi();
  CHECK(*(phi * phi).divide_exact(phi) == phi);
  CHECK_FALSE(P("A+1").divide_exact(phi).has_value());
  CHECK(P("A^4+2+A^-4").divide_exact(phi) == phi);
  // 1 is not divisible by 1 - A^-1 in Laurent polynomials.
  CHECK_FALSE(P("1").divide_exact(P("1-A^-1")).has_value());
}

TEST_CASE("phi fractions canonicalize and compare") {
  PhiFraction one_recovered(P("A^4+2+A^-4"), 2);
  CHECK(one_recovered == PhiFraction::one());
  CHECK(one_recovered.phi_power() == 0);

  PhiFraction half = PhiFraction::phi_inverse(1);
  CHECK(half + half == PhiFraction(P("2"), 1));

  // Monomial scaling: (-A^4)^2 * (p / phi^3) = A^8 p / phi^3.
  PhiFraction f(P("A^2-1"), 3);
  PhiFraction scaled = f.scaled(1, 8);
  CHECK(scaled == PhiFraction(P("A^10-A^8"), 3));

  // Reduction is idempotent.
  PhiFraction g(f.num(), f.phi_power());
  CHECK(g.num() == f.num());
  CHECK(g.phi_power() == f.phi_power());
}

TEST_CASE("phi fraction equality is an equivalence relation") {
  std::mt19937 rng(23);
  LaurentPolynomial phi = LaurentPolynomial::phi();
  for (int i = 0; i < 100; ++i) {
    LaurentPolynomial n = random_poly(rng);
    unsigned k = rng() % 3;
    PhiFraction a(n, k);
    PhiFraction b(n * phi, k + 1);
    PhiFraction c(n * phi.pow(2), k + 2);
    CHECK(a == a);
    CHECK(a == b);
    CHECK(b == a);
    CHECK(b == c);
    CHECK(a == c);
  }
}

TEST_CASE("fraction arithmetic matches cleared polynomial arithmetic") {
  std::mt19937 rng(37);
  LaurentPolynomial phi = LaurentPolynomial::phi();
  for (int i = 0; i < 100; ++i) {
    LaurentPolynomial a = random_poly(rng), b = random_poly(rng);
    unsigned ka = rng() % 3, kb = rng() % 3;
    PhiFraction fa(a, ka), fb(b, kb);
    PhiFraction sum = fa + fb;
    // Clear by phi^{ka+kb}: a phi^kb + b phi^ka.
    LaurentPolynomial cleared = a * phi.pow(kb) + b * phi.pow(ka);
    CHECK(sum == PhiFraction(cleared, ka + kb));
    CHECK(fa * fb == PhiFraction(a * b, ka + kb));
  }
}

TEST_CASE("unit4 shift on fractions") {
  PhiFraction f(P("A^8-A^2"), 2);
  PhiFraction g = f.scaled(-1, 4);  // (-A^4)^1
  CHECK(f.unit4_shift_to(g) == 1);
  CHECK(f.unit4_shift_to(f) == 0);
  CHECK_FALSE(f.unit4_shift_to(f + PhiFraction::one()).has_value());
}

TEST_CASE("canonical text form round trips") {
  CHECK(P("-A^8-A^5+A^4+A^3+3A+3A^-1+A^-3+A^-4-A^-5-A^-8").to_string() ==
        "-A^8-A^5+A^4+A^3+3*A+3*A^-1+A^-3+A^-4-A^-5-A^-8");
  CHECK(LaurentPolynomial::zero().to_string() == "0");
  CHECK(P("0").is_zero());
  std::mt19937 rng(41);
  for (int i = 0; i < 200; ++i) {
    LaurentPolynomial p = random_poly(rng);
    CHECK(LaurentPolynomial::from_string(p.to_string()) == p);
  }
  CHECK_THROWS_AS(P("A^"), std::invalid_argument);
  CHECK_THROWS_AS(P("3 4"), std::invalid_argument);
}

TEST_CASE("json round trips") {
  std::mt19937 rng(53);
  for (int i = 0; i < 100; ++i) {
    LaurentPolynomial p = random_poly(rng);
    CHECK(poly_from_json(poly_to_json(p)) == p);
    PhiFraction f(p, rng() % 4);
    PhiFraction back = frac_from_json(frac_to_json(f));
    CHECK(back == f);
  }
  // Big coefficients survive via the string form.
  LaurentPolynomial big(BigInt("123456789012345678901234567890"), 3);
  CHECK(poly_from_json(poly_to_json(big)) == big);
}
