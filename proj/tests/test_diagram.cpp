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
#include "sgpoly/diagram.hpp"

using namespace sgpoly;

TEST_CASE("catalog entries validate and classify") {
  for (const auto& name : catalog::list()) {
    CatalogEntry e = catalog::load(name);
    CAPTURE(name);
    CHECK(validate(e.diagram).empty());
  }
  CHECK(catalog::load("omega1").kind == GraphKind::K4);
  CHECK(catalog::load("omega7").kind == GraphKind::K4);
  CHECK(catalog::load("theta-planar").kind == GraphKind::Theta);
  CHECK(catalog::load("trefoil").kind == GraphKind::Knot);
  CHECK(catalog::load("hopf").kind == GraphKind::Link);
  CHECK(catalog::load("kink").kind == GraphKind::Link);
}

TEST_CASE("validation reports slot reuse") {
  const char* broken = R"json({
    "nodes": [{"id": "v", "kind": "vertex", "slots": 2}],
    "arcs": [[["v", 0], ["v", 0]]],
    "edges": {"k": {"tail": "v", "head": "v", "arcs": [0]}},
    "free_loops": 0
  })json";
  Diagram d = diagram_from_json(broken);
  auto bad = validate(d);
  REQUIRE_FALSE(bad.empty());
  CHECK(bad.front().find("slot") != std::string::npos);
}

TEST_CASE("validation rejects a mislabelled complete graph") {
  CatalogEntry e = catalog::load("omega1");
  // Reverse one edge: the labelling pattern breaks.
  for (auto& edge : e.diagram.edges)
    if (edge.name == "a6") {
      std::swap(edge.tail, edge.head);
      for (int ai : edge.arcs) std::swap(e.diagram.arcs[ai].from, e.diagram.arcs[ai].to);
      std::reverse(edge.arcs.begin(), edge.arcs.end());
    }
  auto bad = validate(e.diagram);
  REQUIRE_FALSE(bad.empty());
}

TEST_CASE("resolve_state on crossingless diagrams") {
  CatalogEntry theta = catalog::load("theta-planar");
  ResolvedState rs = resolve_state(theta.diagram, {});
  CHECK(rs.omega == 1);
  CHECK(rs.beta == 2);

  CatalogEntry o1 = catalog::load("omega1");
  rs = resolve_state(o1.diagram, {});
  CHECK(rs.omega == 1);
  CHECK(rs.beta == 3);
  CHECK(rs.m1 == 0);
  CHECK(rs.m2 == 0);
}

TEST_CASE("resolve_state on the one-crossing curl") {
  CatalogEntry kink = catalog::load("kink");
  ResolvedState plus = resolve_state(kink.diagram, {1});
  CHECK(plus.omega == 2);   // the curl splits off a circle
  CHECK(plus.beta == 2);
  CHECK(plus.m1 == 1);
  ResolvedState minus = resolve_state(kink.diagram, {-1});
  CHECK(minus.omega == 1);
  CHECK(minus.beta == 1);
  CHECK(minus.m2 == 1);
  ResolvedState zero = resolve_state(kink.diagram, {0});
  CHECK(zero.omega == 1);   // one 4-valent vertex with two loops
  CHECK(zero.beta == 2);
  CHECK_THROWS_AS(resolve_state(kink.diagram, {2}), std::invalid_argument);
  CHECK_THROWS_AS(resolve_state(kink.diagram, {}), std::invalid_argument);
}

TEST_CASE("union-find and traversal component counts agree on all states") {
  for (const auto& name : catalog::list()) {
    CatalogEntry e = catalog::load(name);
    int n = e.diagram.crossing_count();
    if (n > 4) continue;
    long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (long s = 0; s < total; ++s) {
      std::vector<int> state(n);
      long v = s;
      for (int i = 0; i < n; ++i) {
        int trit = static_cast<int>(v % 3);
        v /= 3;
        state[i] = trit == 2 ? 0 : (trit == 0 ? 1 : -1);
      }
      ResolvedState rs = resolve_state(e.diagram, state);
      CAPTURE(name);
      CAPTURE(s);
      CHECK(rs.omega == resolve_state_omega_traversal(e.diagram, state));
      CHECK(rs.beta >= 0);
    }
  }
}

TEST_CASE("edge deletion extracts subgraphs") {
  CatalogEntry o1 = catalog::load("omega1");
  Diagram tri = delete_edges(o1.diagram, {"a1", "a2", "a6"});
  CHECK(tri.crossing_count() == 0);
  CHECK(tri.vertex_count() == 0);
  CHECK(tri.free_loops == 1);  // crossingless unknot

  CatalogEntry o7 = catalog::load("omega7");
  Diagram theta1 = delete_edges(o7.diagram, {"a2", "a3", "a4", "a5", "a6"});
  CHECK(classify(theta1) == GraphKind::Theta);
  CHECK(theta1.crossing_count() == 4);

  Diagram fig8 = delete_edges(o7.diagram, {"a6", "a2", "a3", "a5"});
  CHECK(fig8.vertex_count() == 0);
  CHECK(fig8.crossing_count() == 4);

  // Keeping everything is the identity up to renaming.
  std::set<std::string> all;
  for (const auto& e : o7.diagram.edges) all.insert(e.name);
  Diagram same = delete_edges(o7.diagram, all);
  CHECK(same.nodes.size() == o7.diagram.nodes.size());
  CHECK(same.arcs.size() == o7.diagram.arcs.size());
  CHECK(same.edges.size() == o7.diagram.edges.size());

  // Keeping nothing leaves nothing.
  Diagram none = delete_edges(o7.diagram, {});
  CHECK(none.nodes.empty());
  CHECK(none.free_loops == 0);
}

TEST_CASE("mirror is an involution and flips signs") {
  // Rotating a crossing's slots by two is a relabelling symmetry (the
  // understrand stays at 0 and 2); double mirroring returns the diagram up
  // to that relabelling.
  auto rotate2 = [](Diagram d) {
    for (Arc& a : d.arcs) {
      if (d.nodes[a.from.node].kind == NodeKind::Crossing) a.from.slot = (a.from.slot + 2) % 4;
      if (d.nodes[a.to.node].kind == NodeKind::Crossing) a.to.slot = (a.to.slot + 2) % 4;
    }
    return d;
  };
  for (const auto& name : {"omega7", "trefoil", "hopf"}) {
    CatalogEntry e = catalog::load(name);
    Diagram m = mirror(e.diagram);
    CHECK(validate(m).empty());
    Diagram mm = mirror(m);
    CHECK(diagram_to_json(rotate2(mm)) == diagram_to_json(e.diagram));
    if (classify(e.diagram) == GraphKind::Knot || classify(e.diagram) == GraphKind::K4)
      CHECK(writhe(m) == -writhe(e.diagram));
  }
  // A crossingless diagram is its own mirror.
  CatalogEntry o1 = catalog::load("omega1");
  CHECK(diagram_to_json(mirror(o1.diagram)) == diagram_to_json(o1.diagram));
}

TEST_CASE("disjoint union renames and concatenates") {
  CatalogEntry unknot = catalog::load("unknot");
  Diagram two = disjoint_union(unknot.diagram, unknot.diagram);
  CHECK(validate(two).empty());
  CHECK(two.nodes.size() == 2);
  CHECK(two.edges.size() == 2);
  CHECK(two.nodes[0].name != two.nodes[1].name);
}

TEST_CASE("complete-graph cycle tables") {
  const auto& cycles = k4_cycles();
  CHECK(cycles.size() == 7);
  int triangles = 0;
  for (const auto& c : cycles) triangles += c.size() == 3;
  CHECK(triangles == 4);
  CHECK(k4_thetas().size() == 6);
  for (const auto& t : k4_thetas()) CHECK(t.size() == 5);
  // Each triangle plus its opposite edge misses exactly two edges.
  CHECK(cycles[0] == std::set<std::string>{"a1", "a2", "a6"});
  std::set<std::string> with_opposite = cycles[0];
  with_opposite.insert("a4");  // a4 is disjoint from the a1-a2-a6 triangle
  CHECK(with_opposite.size() == 4);
}

TEST_CASE("crossing smoothing surgery") {
  CatalogEntry o7 = catalog::load("omega7");
  auto crossings = o7.diagram.crossing_nodes();
  Diagram zero = apply_crossing_state(o7.diagram, crossings[0], 0);
  CHECK(validate(zero).empty());
  CHECK(zero.crossing_count() == 3);
  CHECK(zero.vertex_count() == 5);
  Diagram plus = apply_crossing_state(o7.diagram, crossings[0], 1);
  CHECK(validate(plus).empty());
  CHECK(plus.crossing_count() == 3);
  CHECK(plus.vertex_count() == 4);
  // Smoothing the curl of the kinked unknot frees a loop.
  CatalogEntry kinked = catalog::load("unknot-kinked");
  Diagram split = apply_crossing_state(kinked.diagram, kinked.diagram.crossing_nodes()[0], 1);
  CHECK(validate(split).empty());
  CHECK(split.free_loops == 1);
  CHECK(split.crossing_count() == 0);
}

TEST_CASE("diagram json round trip and errors") {
  for (const auto& name : catalog::list()) {
    CatalogEntry e = catalog::load(name);
    Diagram back = diagram_from_json(diagram_to_json(e.diagram, 2));
    CHECK(diagram_to_json(back) == diagram_to_json(e.diagram));
  }
  CHECK_THROWS_WITH_AS(diagram_from_json("{"), doctest::Contains("parse error"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(diagram_from_json(R"({"nodes":[],"arcs":[[["ghost",0],["ghost",1]]]})"),
                       doctest::Contains("unknown node"), std::invalid_argument);
}

TEST_CASE("link conversion and orientation") {
  CatalogEntry hopf = catalog::load("hopf");
  LinkDiagram link = to_link(hopf.diagram);
  CHECK(link.check().empty());
  CHECK(link.crossings == 2);
  CHECK(link.components() == 2);
  CHECK(link.oriented);
  CHECK(link.writhe() == 2);  // both crossings positive in this code
  LinkDiagram m = link.mirrored();
  CHECK(m.writhe() == -2);
  CHECK(m.components() == 2);

  // Round trip through the diagram view.
  Diagram view = link_to_diagram(link);
  CHECK(validate(view).empty());
  LinkDiagram again = to_link(view);
  CHECK(again.components() == 2);
  CHECK(again.oriented);
  CHECK(again.writhe() == 2);
}

TEST_CASE("vertex insertion on a closed strand") {
  CatalogEntry o7 = catalog::load("omega7");
  Diagram cycle = delete_edges(o7.diagram, {"a6", "a2", "a3", "a5"});
  Diagram knot = as_knot_graph(cycle);
  CHECK(validate(knot).empty());
  CHECK(classify(knot) == GraphKind::Knot);
  CHECK(knot.crossing_count() == 4);
  CHECK_THROWS_AS(as_knot_graph(catalog::load("omega1").diagram), std::invalid_argument);
}
