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

#include "sgpoly/catalog.hpp"
#include "sgpoly/relations.hpp"

using namespace sgpoly;

namespace {
LaurentPolynomial P(const std::string& s) { return LaurentPolynomial::from_string(s); }

StateSumConfig big_cfg() {
  StateSumConfig cfg;
  cfg.bracket_crossing_cap = 28;
  return cfg;
}

const PhiFraction& term(const VerificationReport& rep, const std::string& name) {
  for (const auto& [n, v] : rep.terms)
    if (n == name) return v;
  REQUIRE(false);
  static PhiFraction dummy;
  return dummy;
}
}  // namespace

TEST_CASE("theta relation on the crossingless curve") {
  auto rep = verify_theta_theorem(catalog::load("theta-planar").diagram, big_cfg());
  CHECK(rep.equal);
  CHECK(term(rep, "normalized_band_poly") == PhiFraction(P("A^8+A^4+2+A^-4+A^-8"), 2));
  CHECK(term(rep, "jones_associated") == PhiFraction(P("A^4+2+A^-4")));
}

TEST_CASE("theta relation on the knotted curve") {
  CHECK(verify_theta_theorem(catalog::load("theta-knotted").diagram, big_cfg()).equal);
}

TEST_CASE("theta closed form, both parities") {
  auto cfg = big_cfg();
  CHECK(verify_theta_jones_formula(catalog::load("theta-planar").diagram, {}, cfg).equal);
  CHECK(verify_theta_jones_formula(catalog::load("theta-knotted").diagram, {}, cfg).equal);
  // The extension beyond even twist counts.
  auto odd = verify_theta_jones_formula(catalog::load("theta-planar").diagram,
                                        std::array<int, 3>{1, 0, 0}, cfg);
  CHECK(odd.equal);
  CHECK(odd.note == "twist parameters overridden");
  CHECK(verify_theta_jones_formula(catalog::load("theta-knotted").diagram,
                                   std::array<int, 3>{1, -2, 3}, cfg)
            .equal);
}

TEST_CASE("main relation reproduces the worked values") {
  auto cfg = big_cfg();
  auto rep1 = verify_main_theorem(catalog::load("omega1").diagram, cfg);
  CHECK(rep1.equal);
  CHECK(term(rep1, "normalized_band_poly") == PhiFraction(P("-A^12-2A^4-2A^-4-A^-12"), 3));
  CHECK(term(rep1, "jones_associated") == PhiFraction(P("-A^6-3A^2-3A^-2-A^-6")));
  PhiFraction diff = term(rep1, "normalized_band_poly") - term(rep1, "jones_associated");
  CHECK(diff == PhiFraction(P("6A^8+13A^4+20+13A^-4+6A^-8"), 3));

  auto rep7 = verify_main_theorem(catalog::load("omega7").diagram, cfg);
  CHECK(rep7.equal);
  CHECK(term(rep7, "theta_sum") ==
        PhiFraction(P("-A^36+A^28+A^24+A^20+A^16+A^12+5A^8+4A^4+10"
                      "+4A^-4+5A^-8+A^-12+A^-16+A^-20+A^-24+A^-28-A^-36"),
                    2));
  CHECK(term(rep7, "knot_sum") ==
        PhiFraction(P("-A^28+A^20-7A^4-7-7A^-4+A^-20-A^-28"), 1));
  CHECK(term(rep7, "jones_associated") ==
        PhiFraction(P("A^30-2A^26+A^22+A^18-3A^14+3A^10-3A^6-2A^2"
                      "-2A^-2-3A^-6+3A^-10-3A^-14+A^-18+A^-22-2A^-26+A^-30")));
}

TEST_CASE("state-sum corollary follows from the main relation") {
  auto cfg = big_cfg();
  Diagram o7 = catalog::load("omega7").diagram;
  auto main_rep = verify_main_theorem(o7, cfg);
  auto yam = verify_yamada_corollary(o7, cfg);
  CHECK(yam.equal);
  // lhs_yam = phi^3 (V - normalized band polynomial), and the right side is
  // the same transform of the main right side.
  PhiFraction phi3(LaurentPolynomial::phi().pow(3));
  PhiFraction v = term(main_rep, "jones_associated");
  CHECK(yam.lhs == phi3 * (v - main_rep.lhs));
  CHECK(yam.rhs == phi3 * (v - main_rep.rhs));
}

TEST_CASE("all-links corollary and bar expansion") {
  auto cfg = big_cfg();
  for (const auto& name : {"omega1", "omega7"}) {
    CAPTURE(name);
    Diagram d = catalog::load(name).diagram;
    CHECK(verify_links_corollary(d, cfg).equal);
    CHECK(verify_bar_expansion(d, cfg).equal);
    CHECK(verify_k4_jones_formula(d, cfg).equal);
  }
}

TEST_CASE("knot base cases") {
  auto cfg = big_cfg();
  for (const auto& name : {"unknot", "unknot-kinked", "trefoil", "figure-eight"}) {
    CAPTURE(name);
    auto rep = verify_knot_normalization(catalog::load(name).diagram, cfg);
    CHECK(rep.equal);
    CHECK(rep.rhs == PhiFraction::phi_inverse(1));
  }
}

TEST_CASE("verifiers reject the wrong graph kind") {
  auto cfg = big_cfg();
  CHECK_THROWS_AS(verify_main_theorem(catalog::load("theta-planar").diagram, cfg),
                  KindMismatchError);
  CHECK_THROWS_AS(verify_theta_theorem(catalog::load("omega1").diagram, cfg), KindMismatchError);
  CHECK_THROWS_AS(verify_knot_normalization(catalog::load("omega1").diagram, cfg),
                  KindMismatchError);
}

TEST_CASE("reports serialize deterministically") {
  auto cfg = big_cfg();
  Diagram d = catalog::load("omega1").diagram;
  auto a = verify_main_theorem(d, cfg).to_json(2);
  auto b = verify_main_theorem(d, cfg).to_json(2);
  CHECK(a == b);
  CHECK(a.find("\"identity\"") != std::string::npos);
  CHECK(a.find("\"equal\": true") != std::string::npos);
}
