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
#include "sgpoly/surfaces.hpp"

using namespace sgpoly;

namespace {
LaurentPolynomial P(const std::string& s) { return LaurentPolynomial::from_string(s); }

int w_of(const TwistData& td, const std::string& a, const std::string& b) {
  int i = -1, j = -1;
  for (size_t k = 0; k < td.edge_names.size(); ++k) {
    if (td.edge_names[k] == a) i = static_cast<int>(k);
    if (td.edge_names[k] == b) j = static_cast<int>(k);
  }
  REQUIRE(i >= 0);
  REQUIRE(j >= 0);
  return td.w[i][j];
}
}  // namespace

TEST_CASE("crossing sums of the reference embeddings") {
  TwistData zero = crossing_matrix(catalog::load("omega1").diagram);
  for (const auto& row : zero.w)
    for (int v : row) CHECK(v == 0);

  TwistData o7 = crossing_matrix(catalog::load("omega7").diagram);
  CHECK(w_of(o7, "a2", "a3") == 1);
  CHECK(w_of(o7, "a3", "a5") == 1);
  CHECK(w_of(o7, "a2", "a6") == -1);
  CHECK(w_of(o7, "a5", "a6") == -1);
  CHECK(w_of(o7, "a1", "a1") == 0);
  CHECK(w_of(o7, "a3", "a4") == 0);

  TwistData m = crossing_matrix(mirror(catalog::load("omega7").diagram));
  CHECK(w_of(m, "a2", "a3") == -1);
  CHECK(w_of(m, "a5", "a6") == 1);
}

TEST_CASE("twist parameters from the closed formulas") {
  CHECK(twist_parameters(catalog::load("omega1").diagram).params ==
        std::vector<int>{0, 0, 0, 0, 0, 0});
  CHECK(twist_parameters(catalog::load("omega7").diagram).params ==
        std::vector<int>{-2, 0, 0, 2, 0, 0});
  CHECK(twist_parameters(catalog::load("theta-planar").diagram).params ==
        std::vector<int>{0, 0, 0});
  // Knots: -2 * writhe.
  CHECK(twist_parameters(catalog::load("trefoil").diagram).params == std::vector<int>{-6});
  CHECK(twist_parameters(catalog::load("figure-eight").diagram).params == std::vector<int>{0});
  CHECK_THROWS_AS(twist_parameters(catalog::load("hopf").diagram), KindMismatchError);
}

TEST_CASE("twist parameters are odd under mirroring") {
  for (const auto& name : {"omega2", "omega6", "omega7", "omega9", "theta-knotted"}) {
    CatalogEntry e = catalog::load(name);
    auto params = twist_parameters(e.diagram).params;
    auto mirrored = twist_parameters(mirror(e.diagram)).params;
    REQUIRE(params.size() == mirrored.size());
    CAPTURE(name);
    for (size_t i = 0; i < params.size(); ++i) CHECK(mirrored[i] == -params[i]);
  }
}

TEST_CASE("twist coefficients") {
  CHECK(twist_coefficient(0).is_zero());
  CHECK(twist_coefficient(1) == P("A^-1"));
  CHECK(twist_coefficient(2) == P("1-A^-4"));
  CHECK(twist_coefficient(-1) == P("A"));
  for (int n = -8; n <= 8; ++n) CHECK_NOTHROW(twist_coefficient(n));
}

TEST_CASE("twist identity on a catalog band") {
  StateSumConfig cfg;
  CatalogEntry o7 = catalog::load("omega7");
  BandedLink base = double_banded(o7.diagram);
  LaurentPolynomial b0 = kauffman_bracket(base.to_link(), cfg);
  BandedLink cut = double_banded(o7.diagram);
  smooth_band(cut, "a1");
  LaurentPolynomial binf = kauffman_bracket(cut.to_link(), cfg);
  for (int n = -3; n <= 3; ++n) {
    BandedLink twisted = double_banded(o7.diagram);
    insert_half_twists(twisted, "a1", n);
    LaurentPolynomial bn = kauffman_bracket(twisted.to_link(), cfg);
    LaurentPolynomial rhs = LaurentPolynomial::monomial(1, n) * b0 + twist_coefficient(n) * binf;
    CAPTURE(n);
    CHECK(bn == rhs);
  }
}

TEST_CASE("associated links and their writhe") {
  StateSumConfig cfg;
  AssociatedLink o1 = associated_link(catalog::load("omega1").diagram, cfg);
  CHECK(o1.link.crossings == 0);
  CHECK(o1.link.components() == 4);

  AssociatedLink tp = associated_link(catalog::load("theta-planar").diagram, cfg);
  CHECK(tp.link.crossings == 0);
  CHECK(tp.link.components() == 3);

  for (const auto& name : catalog::list()) {
    CatalogEntry e = catalog::load(name);
    if (e.kind != GraphKind::K4 && e.kind != GraphKind::Theta && e.kind != GraphKind::Knot)
      continue;
    CAPTURE(name);
    AssociatedLink assoc = associated_link(e.diagram, cfg);
    long sum = 0;
    for (int p : assoc.data.params) sum += p;
    if (assoc.link.crossings > 0) CHECK(assoc.link.writhe() == -sum);
  }
}

TEST_CASE("cycle writhes against twist parameters") {
  CatalogEntry o7 = catalog::load("omega7");
  CHECK(cycle_writhe(o7.diagram, {"a1", "a2", "a6"}) == 1);
  CHECK(2 * cycle_writhe(o7.diagram, {"a1", "a2", "a6"}) == -(-2 + 0 + 0));
  for (const auto& name : catalog::list()) {
    CatalogEntry e = catalog::load(name);
    if (e.kind != GraphKind::K4) continue;
    CAPTURE(name);
    CHECK(twist_writhe_violations(e.diagram).empty());
  }
}

TEST_CASE("normalized polynomials by kind") {
  StateSumConfig cfg;
  // All twists vanish, so the normalized and raw values coincide.
  CHECK(normalized_jaeger(catalog::load("omega1").diagram, cfg) ==
        jaeger(catalog::load("omega1").diagram, cfg));
  // Writhe-zero knot: same thing.
  CatalogEntry fig8 = catalog::load("figure-eight");
  PhiFraction expect(P("-A^26+A^22-A^2-A^-2+A^-22-A^-26"));
  expect += PhiFraction::phi_inverse(1);
  CHECK(normalized_jaeger(fig8.diagram, cfg) == expect);
  CHECK(normalized_jaeger(catalog::load("unknot").diagram, cfg) ==
        PhiFraction(P("-A^2-A^-2")) + PhiFraction::phi_inverse(1));
  CHECK_THROWS_AS(normalized_jaeger(catalog::load("hopf").diagram, cfg), KindMismatchError);
  // The normalized pair is invariant: the kinked unknot agrees with the
  // plain one on the nose.
  CHECK(normalized_jaeger(catalog::load("unknot-kinked").diagram, cfg) ==
        normalized_jaeger(catalog::load("unknot").diagram, cfg));
  CHECK(normalized_yamada(catalog::load("unknot-kinked").diagram, cfg) ==
        normalized_yamada(catalog::load("unknot").diagram, cfg));
}

TEST_CASE("theta labelling obeys the rotation convention when possible") {
  auto lab = theta_labeling(catalog::load("theta-planar").diagram);
  REQUIRE(lab.has_value());
  CHECK(lab->edge[0] == "e1");
  CHECK(lab->edge[1] == "e2");
  CHECK(lab->edge[2] == "e3");
  CHECK_FALSE(theta_labeling(catalog::load("omega1").diagram).has_value());
}
