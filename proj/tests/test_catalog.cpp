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

#include <cstdio>
#include <fstream>

#include "sgpoly/catalog.hpp"
#include "sgpoly/invariants.hpp"

using namespace sgpoly;

namespace {
LaurentPolynomial P(const std::string& s) { return LaurentPolynomial::from_string(s); }
}

TEST_CASE("listing and loading") {
  auto names = catalog::list();
  CHECK(names.size() == 18);
  CHECK(names.front() == "omega1");
  for (const auto& name : names) {
    CatalogEntry e = catalog::load(name);
    CHECK(e.name == name);
    CHECK_FALSE(e.description.empty());
  }
  CHECK_THROWS_WITH_AS(catalog::load("no-such-entry"), doctest::Contains("no catalog entry"),
                       std::invalid_argument);
}

TEST_CASE("save and reload through a file") {
  CatalogEntry e = catalog::load("omega7");
  std::string path = "omega7_copy.json";
  catalog::save(e, path);
  CatalogEntry back = catalog::load(path);
  CHECK(back.kind == GraphKind::K4);
  CHECK(diagram_to_json(back.diagram) == diagram_to_json(e.diagram));
  std::remove(path.c_str());
}

TEST_CASE("malformed files are rejected with a location") {
  std::string path = "broken.json";
  {
    std::ofstream out(path);
    out << "{ \"nodes\": [ oops";
  }
  CHECK_THROWS_WITH_AS(catalog::load(path), doctest::Contains("parse error"),
                       std::invalid_argument);
  std::remove(path.c_str());
}

TEST_CASE("reference polynomials match, pinned rows exactly") {
  StateSumConfig cfg;
  for (const auto& name : catalog::list()) {
    CatalogEntry e = catalog::load(name);
    if (!e.expected_yamada) continue;
    LaurentPolynomial y = yamada(e.diagram, cfg);
    auto shift = e.expected_yamada->unit_shift_to(y);
    CAPTURE(name);
    REQUIRE(shift.has_value());
    if (e.exact) CHECK(*shift == 0);
  }
}

TEST_CASE("deletion pipeline of the four-crossing embedding") {
  StateSumConfig cfg;
  Diagram o7 = catalog::load("omega7").diagram;

  // Removing the edge between the two top vertices leaves the knotted
  // theta curve, with the published polynomial on the nose.
  Diagram theta1 = delete_edges(o7, {"a2", "a3", "a4", "a5", "a6"});
  CHECK(yamada(theta1, cfg) == P("A^7-A^5-A^3-A^2-1-A^-2-A^-5-A^-8"));

  // Removing the opposite edge gives its mirror image.
  Diagram theta4 = delete_edges(o7, {"a1", "a2", "a3", "a5", "a6"});
  CHECK(yamada(theta4, cfg) == P("A^7-A^5-A^3-A^2-1-A^-2-A^-5-A^-8").substitute_power(-1));

  // Six of the seven cycles are trivial, the quadrilateral through
  // a6,a2,a3,a5 is a figure-eight knot.
  int trivial = 0;
  for (const auto& cycle : k4_cycles()) {
    Diagram knot = delete_edges(o7, cycle);
    LinkDiagram link = to_link(knot);
    if (!link.oriented) link.orient();
    LaurentPolynomial v = jones(link, cfg);
    if (v == LaurentPolynomial::one()) trivial++;
  }
  CHECK(trivial == 6);
  Diagram fig8 = delete_edges(o7, {"a6", "a2", "a3", "a5"});
  LinkDiagram fl = to_link(fig8);
  if (!fl.oriented) fl.orient();
  CHECK(jones(fl, cfg) == P("A^8-A^4+1-A^-4+A^-8"));
}

TEST_CASE("embedded data and loader agree") {
  for (const auto& name : catalog::list()) {
    const char* raw = catalog::embedded_json(name);
    REQUIRE(raw != nullptr);
    Diagram d = diagram_from_json(raw);
    CHECK(validate(d).empty());
  }
  CHECK(catalog::embedded_json("nonexistent") == nullptr);
}
