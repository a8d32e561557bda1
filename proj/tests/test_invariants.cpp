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
#include "sgpoly/invariants.hpp"

using namespace sgpoly;

namespace {

LaurentPolynomial P(const std::string& s) { return LaurentPolynomial::from_string(s); }

LinkDiagram unlink(int k) {
  LinkDiagram l;
  l.free_loops = k;
  return l;
}

LinkDiagram knot_link(const std::string& name) {
  CatalogEntry e = catalog::load(name);
  std::set<std::string> keep;
  for (const auto& edge : e.diagram.edges) keep.insert(edge.name);
  LinkDiagram link = to_link(delete_edges(e.diagram, keep));
  if (!link.oriented) link.orient();
  return link;
}

}  // namespace

TEST_CASE("bracket axioms and small links") {
  StateSumConfig cfg;
  CHECK(kauffman_bracket(unlink(1), cfg) == LaurentPolynomial::one());
  CHECK(kauffman_bracket(unlink(3), cfg) == P("-A^2-A^-2") * P("-A^2-A^-2"));
  CHECK(kauffman_bracket(to_link(catalog::load("kink").diagram), cfg) == P("-A^3"));
  CHECK(kauffman_bracket(to_link(catalog::load("hopf").diagram), cfg) == P("-A^4-A^-4"));
  CHECK(kauffman_bracket(knot_link("trefoil"), cfg) == P("-A^5-A^-3+A^-7"));
  CHECK(kauffman_bracket(knot_link("figure-eight"), cfg) == P("A^8-A^4+1-A^-4+A^-8"));
}

TEST_CASE("the published 2-parallel bracket of the figure-eight") {
  StateSumConfig cfg;
  LinkDiagram cable = double_diagram(catalog::load("figure-eight").diagram);
  CHECK(cable.crossings == 16);
  CHECK(kauffman_bracket(cable, cfg) == P("-A^26+A^22-A^2-A^-2+A^-22-A^-26"));
}

TEST_CASE("state sum, skein recursion and sweep agree") {
  StateSumConfig enumerate;
  enumerate.bracket_sweep_threshold = 30;  // force direct enumeration
  StateSumConfig sweep;
  sweep.bracket_sweep_threshold = 0;  // force the frontier sweep
  StateSumConfig memo;
  memo.skein_memo = true;

  std::vector<LinkDiagram> diagrams;
  diagrams.push_back(to_link(catalog::load("hopf").diagram));
  diagrams.push_back(to_link(catalog::load("kink").diagram));
  diagrams.push_back(knot_link("trefoil"));
  diagrams.push_back(knot_link("figure-eight"));
  diagrams.push_back(double_diagram(catalog::load("trefoil").diagram));
  diagrams.push_back(double_diagram(catalog::load("theta-knotted").diagram));
  for (const auto& link : diagrams) {
    LaurentPolynomial direct = kauffman_bracket(link, enumerate);
    CHECK(direct == kauffman_bracket(link, sweep));
    CHECK(direct == kauffman_bracket_skein(link, enumerate));
    CHECK(direct == kauffman_bracket_skein(link, memo));
  }
}

TEST_CASE("jones polynomials") {
  StateSumConfig cfg;
  LinkDiagram kinked = to_link(catalog::load("kink").diagram);
  CHECK(jones(kinked, cfg) == LaurentPolynomial::one());  // still the unknot
  CHECK(jones(unlink(4), cfg) == P("-A^6-3A^2-3A^-2-A^-6"));
  CHECK(jones(knot_link("trefoil"), cfg) == P("A^-4+A^-12-A^-16"));
  CHECK(jones(knot_link("figure-eight"), cfg) == P("A^8-A^4+1-A^-4+A^-8"));
  LinkDiagram unoriented = knot_link("trefoil");
  unoriented.oriented = false;
  CHECK_THROWS_AS(jones(unoriented, cfg), std::invalid_argument);
}

TEST_CASE("graph weights at the state-sum point") {
  CHECK(graph_weight(MultiGraph{}) == LaurentPolynomial::one());
  MultiGraph isolated;
  isolated.vertices = 1;
  CHECK(graph_weight(isolated) == P("-1"));
  MultiGraph loop;
  loop.vertices = 1;
  loop.edges = {{0, 0}};
  CHECK(graph_weight(loop) == P("A+1+A^-1"));
  MultiGraph two_loops;  // bouquet with two petals: -(y+1)^2 - ... collapses to -P^2
  two_loops.vertices = 1;
  two_loops.edges = {{0, 0}, {0, 0}};
  CHECK(graph_weight(two_loops) == -(P("A+1+A^-1") * P("A+1+A^-1")));
}

TEST_CASE("state-sum polynomial of small spatial graphs") {
  StateSumConfig cfg;
  CHECK(yamada(catalog::load("theta-planar").diagram, cfg) == P("-A^2-A-2-A^-1-A^-2"));
  CHECK(yamada(catalog::load("omega1").diagram, cfg) == P("A^3+2A+2A^-1+A^-3"));
  CHECK(yamada(catalog::load("theta-knotted").diagram, cfg) ==
        P("A^7-A^5-A^3-A^2-1-A^-2-A^-5-A^-8"));
  CHECK(yamada(catalog::load("unknot").diagram, cfg) == P("A+1+A^-1"));
  // One positive curl multiplies by A^2.
  CHECK(yamada(catalog::load("unknot-kinked").diagram, cfg) == P("A^3+A^2+A"));
}

TEST_CASE("band polynomial base values") {
  StateSumConfig cfg;
  PhiFraction theta = jaeger(catalog::load("theta-planar").diagram, cfg);
  CHECK(theta == PhiFraction(P("A^8+A^4+2+A^-4+A^-8"), 2));
  PhiFraction omega1 = jaeger(catalog::load("omega1").diagram, cfg);
  CHECK(omega1 == PhiFraction(P("-A^12-2A^4-2A^-4-A^-12"), 3));
  PhiFraction unknot = jaeger(catalog::load("unknot").diagram, cfg);
  CHECK(unknot == PhiFraction(P("-A^2-A^-2")) + PhiFraction::phi_inverse(1));
}

TEST_CASE("the state-sum route matches the band route") {
  StateSumConfig cfg;
  for (const auto& name : catalog::list()) {
    CatalogEntry e = catalog::load(name);
    if (e.kind != GraphKind::K4 && e.kind != GraphKind::Theta && e.kind != GraphKind::Knot)
      continue;
    if (e.diagram.crossing_count() > 4) continue;
    CAPTURE(name);
    CHECK(jaeger(e.diagram, cfg) == jaeger_via_yamada(e.diagram, cfg));
  }
}

TEST_CASE("knot expansion of the band polynomial") {
  StateSumConfig cfg;
  for (const auto& name : {"unknot", "unknot-kinked", "trefoil", "figure-eight"}) {
    CatalogEntry e = catalog::load(name);
    PhiFraction expected(kauffman_bracket(double_diagram(e.diagram), cfg));
    expected += PhiFraction::phi_inverse(1);
    CAPTURE(name);
    CHECK(jaeger(e.diagram, cfg) == expected);
  }
}

TEST_CASE("bracket is multiplicative over disjoint unions") {
  StateSumConfig cfg;
  Diagram hopf = catalog::load("hopf").diagram;
  Diagram two = disjoint_union(hopf, hopf);
  LaurentPolynomial one_copy = kauffman_bracket(to_link(hopf), cfg);
  CHECK(kauffman_bracket(to_link(two), cfg) == P("-A^2-A^-2") * one_copy * one_copy);
}

TEST_CASE("unit drift of the raw polynomials under a curl") {
  StateSumConfig cfg;
  LaurentPolynomial y0 = yamada(catalog::load("omega1").diagram, cfg);
  LaurentPolynomial y1 = yamada(catalog::load("omega1-kinked").diagram, cfg);
  auto shift = y0.unit_shift_to(y1);
  REQUIRE(shift.has_value());
  CHECK(*shift != 0);
  PhiFraction j0 = jaeger(catalog::load("omega1").diagram, cfg);
  PhiFraction j1 = jaeger(catalog::load("omega1-kinked").diagram, cfg);
  auto shift4 = j0.unit4_shift_to(j1);
  REQUIRE(shift4.has_value());
  CHECK(*shift4 != 0);
}

TEST_CASE("mirroring inverts the variable") {
  StateSumConfig cfg;
  for (const auto& name : {"omega2", "omega7", "theta-knotted", "trefoil"}) {
    CatalogEntry e = catalog::load(name);
    CAPTURE(name);
    CHECK(yamada(mirror(e.diagram), cfg) == yamada(e.diagram, cfg).substitute_power(-1));
  }
}

TEST_CASE("crossing caps are enforced") {
  StateSumConfig cfg;
  cfg.bracket_crossing_cap = 3;
  CHECK_THROWS_AS(kauffman_bracket(knot_link("figure-eight"), cfg), CapExceededError);
  cfg.yamada_crossing_cap = 3;
  CHECK_THROWS_AS(yamada(catalog::load("omega7").diagram, cfg), CapExceededError);
}

TEST_CASE("worker count does not change results") {
  StateSumConfig serial;
  serial.workers = 1;
  StateSumConfig wide;
  wide.workers = 7;
  LinkDiagram cable = double_diagram(catalog::load("trefoil").diagram);
  CHECK(kauffman_bracket(cable, serial) == kauffman_bracket(cable, wide));
  Diagram o7 = catalog::load("omega7").diagram;
  CHECK(yamada(o7, serial) == yamada(o7, wide));
}
