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

#ifndef SGPOLY_DIAGRAM_HPP
#define SGPOLY_DIAGRAM_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sgpoly {

// Planar diagram code conventions.
//
// A node is a rigid vertex (any valence) or a crossing (4 slots).  Slots are
// listed counterclockwise.  At a crossing the understrand occupies slots 0
// and 2, the overstrand slots 1 and 3; a strand entering slot s leaves at
// slot (s + 2) mod 4.  With the understrand drawn along the SW-NE diagonal
// (slot 0 = SW, 1 = SE, 2 = NE, 3 = NW), the A-smoothing of the bracket
// joins slots 0-1 and 2-3, the B-smoothing joins 1-2 and 3-0.  This is the
// orientation of the smoothing pinned by <positive kink> = -A^3 <unknot>.

enum class NodeKind : std::uint8_t { Vertex, Crossing };

struct Node {
  NodeKind kind = NodeKind::Vertex;
  std::string name;
  int slots = 0;
};

struct Endpoint {
  int node = -1;
  int slot = -1;
  bool operator==(const Endpoint&) const = default;
  auto operator<=>(const Endpoint&) const = default;
};

/// Arc between two slots.  When the arc belongs to an oriented edge, `from`
/// is the tail side and the flow runs from -> to.
struct Arc {
  Endpoint from, to;
};

struct Edge {
  std::string name;
  int tail = -1, head = -1;      // vertex node indices
  std::vector<int> arcs;         // ordered tail -> head
};

enum class GraphKind : std::uint8_t { K4, Theta, Knot, Link, Other };

std::string to_string(GraphKind k);

/// Combinatorial diagram of a spatial graph.  Vertex-free closed strands
/// (arcs chaining only through crossings) are allowed and represent link
/// components; crossingless circles are tracked by `free_loops`.
/// Diagrams are treated as immutable after validation: every structural
/// operation returns a new value, so sharing across threads is safe.
struct SpatialGraphDiagram {
  std::vector<Node> nodes;
  std::vector<Arc> arcs;
  std::vector<Edge> edges;
  long free_loops = 0;

  int node_index(const std::string& name) const;
  const Edge* find_edge(const std::string& name) const;
  int crossing_count() const;
  int vertex_count() const;
  std::vector<int> crossing_nodes() const;

  /// Arc index whose endpoint sits at (node, slot), or -1.
  int arc_at(int node, int slot) const;
};

using Diagram = SpatialGraphDiagram;

/// Structural validation; empty result means the diagram is well formed.
std::vector<std::string> validate(const Diagram& d);

/// Classification of a valid diagram's underlying abstract graph.
GraphKind classify(const Diagram& d);

/// Crossing sign under the diagram's edge orientations (+1 / -1).
int crossing_sign(const Diagram& d, int crossing_node);

/// Sum of crossing signs over crossings owned by oriented edges.
int writhe(const Diagram& d);

/// Over/under switched at every crossing.
Diagram mirror(const Diagram& d);

/// Disjoint union with node/edge renaming of `b` on collisions.
Diagram disjoint_union(const Diagram& a, const Diagram& b);

/// Keeps only the named edges; crossings with a deleted strand dissolve,
/// 2-valent vertices dissolve, isolated vertices vanish.  Strands whose
/// vertices all dissolve become vertex-free components or free loops.
Diagram delete_edges(const Diagram& d, const std::set<std::string>& keep);

/// Inserts one 2-valent vertex on a vertex-free diagram with exactly one
/// closed component, making it a one-edge spatial graph (a knot).
Diagram as_knot_graph(const Diagram& d, const std::string& edge_name = "k");

/// Rebuilds the edge records of a diagram whose nodes and arcs are already
/// wired: walks vertex-to-vertex strands, renames edges e1, e2, ... and
/// reorients arcs along the walk.  Strands that touch no vertex stay
/// unowned link components.
Diagram rebuild_edges(const Diagram& d);

/// Replaces one crossing by a smoothing (state +1 or -1) or by a rigid
/// 4-valent vertex (state 0), reconnecting the strands.  Edge records are
/// rebuilt, so names and orientations are fresh.
Diagram apply_crossing_state(const Diagram& d, int crossing_node, int state);

/// Abstract multigraph (loops and multi-edges allowed).
struct MultiGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  int omega() const;               // connected components
  int beta() const;                // |E| - |V| + omega
};

/// Result of resolving every crossing of a state.
struct ResolvedState {
  MultiGraph graph;   // vertices + 0-state crossings + one loop-vertex per circle
  int omega = 0;
  int beta = 0;
  int m1 = 0;         // crossings smoothed with +1
  int m2 = 0;         // crossings smoothed with -1
};

/// Applies a +1/-1/0 state to every crossing.  `state` is indexed by the
/// order of crossing_nodes().  Crossingless circles created by smoothing
/// (and pre-existing free loops) enter the abstract graph as one vertex
/// carrying one loop edge, which is what makes the state sum match the
/// skein relation for diagrams with closed strands.
ResolvedState resolve_state(const Diagram& d, const std::vector<int>& state);

/// Independent component count of the resolved diagram by strand traversal
/// (no union-find); used to cross-check resolve_state.
int resolve_state_omega_traversal(const Diagram& d, const std::vector<int>& state);

/// The seven simple cycles of the complete graph on four vertices, as edge
/// label sets over a1..a6: four triangles and three quadrilaterals.
const std::vector<std::set<std::string>>& k4_cycles();
/// The six theta subgraphs: complements of a single edge.
const std::vector<std::set<std::string>>& k4_thetas();

/// Crossings-only diagram in chord form: ports are 4*crossing + slot, and
/// `mate` pairs ports joined by an arc.  Orientation, when present, stores
/// the flow of each passage: under_flow02[c] means the understrand runs
/// slot 0 -> slot 2, over_flow13[c] means the overstrand runs 1 -> 3.
struct LinkDiagram {
  int crossings = 0;
  std::vector<int> mate;
  std::vector<std::uint8_t> under_flow02;
  std::vector<std::uint8_t> over_flow13;
  bool oriented = false;
  long free_loops = 0;

  int port(int c, int s) const { return 4 * c + s; }
  /// Number of link components, counting free loops.
  int components() const;
  /// Crossing sign; requires orientation.
  int sign(int c) const;
  long writhe() const;
  /// Assigns an arbitrary coherent orientation to every component.
  void orient();
  /// Over/under switched at every crossing.
  LinkDiagram mirrored() const;
  /// Consistency check (involution mate, valid flows); empty if ok.
  std::vector<std::string> check() const;
};

/// Conversion for vertex-free diagrams; preserves edge-induced orientation
/// when every strand is owned by an oriented edge.
LinkDiagram to_link(const Diagram& d);

/// Crossings-only Diagram view of a chord-form link, mainly for
/// serialization.  Arc order follows the link's flow when oriented.
Diagram link_to_diagram(const LinkDiagram& l);

/// JSON serialization of diagrams (schema documented in README).
std::string diagram_to_json(const Diagram& d, int indent = -1);
Diagram diagram_from_json(const std::string& text);

}  // namespace sgpoly

#endif  // SGPOLY_DIAGRAM_HPP
