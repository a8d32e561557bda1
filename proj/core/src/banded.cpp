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

#include "sgpoly/banded.hpp"

#include <stdexcept>

namespace sgpoly {

int BandedLink::new_crossing(bool u02, bool o13) {
  // Junction ports live above the crossing range, so growing the crossing
  // range must shift them.
  const int c = crossings;
  for (auto& piece : pieces) {
    if (piece.first >= 4 * crossings) piece.first += 4;
    if (piece.second >= 4 * crossings) piece.second += 4;
  }
  crossings++;
  under_flow02.push_back(u02 ? 1 : 0);
  over_flow13.push_back(o13 ? 1 : 0);
  return c;
}

LinkDiagram BandedLink::to_link() const {
  LinkDiagram l;
  l.crossings = crossings;
  l.free_loops = free_loops;
  l.under_flow02 = under_flow02;
  l.over_flow13 = over_flow13;
  l.oriented = true;
  l.mate.assign(4 * crossings, -1);
  // Junction ports have exactly two incident piece ends; contract chains.
  const int total = 4 * crossings + junction_ports;
  std::vector<std::array<int, 2>> incident(total, {-1, -1});
  auto attach = [&](int port, int piece) {
    if (incident[port][0] < 0)
      incident[port][0] = piece;
    else if (incident[port][1] < 0)
      incident[port][1] = piece;
    else
      throw std::logic_error("banded link: port used more than twice");
  };
  for (size_t i = 0; i < pieces.size(); ++i) {
    attach(pieces[i].first, static_cast<int>(i));
    attach(pieces[i].second, static_cast<int>(i));
  }
  for (int p = 0; p < 4 * crossings; ++p)
    if (incident[p][0] < 0 || incident[p][1] >= 0)
      throw std::logic_error("banded link: crossing port not simply attached");

  std::vector<bool> piece_seen(pieces.size(), false);
  auto other_end = [&](int piece, int port) {
    return pieces[piece].first == port ? pieces[piece].second : pieces[piece].first;
  };
  for (int p = 0; p < 4 * crossings; ++p) {
    if (l.mate[p] >= 0) continue;
    int piece = incident[p][0];
    int at = other_end(piece, p);
    piece_seen[piece] = true;
    while (at >= 4 * crossings) {
      int next = incident[at][0] == piece ? incident[at][1] : incident[at][0];
      if (next < 0) throw std::logic_error("banded link: dangling junction");
      at = other_end(next, at);
      piece = next;
      piece_seen[piece] = true;
    }
    l.mate[p] = at;
    l.mate[at] = p;
  }
  // Remaining unseen pieces form junction-only circles.
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (piece_seen[i]) continue;
    int piece = static_cast<int>(i);
    int at = pieces[i].second;
    piece_seen[i] = true;
    while (true) {
      int next = incident[at][0] == piece ? incident[at][1] : incident[at][0];
      if (piece_seen[next]) break;
      piece_seen[next] = true;
      at = other_end(next, at);
      piece = next;
    }
    l.free_loops++;
  }
  auto bad = l.check();
  if (!bad.empty()) throw std::logic_error("banded link conversion failed: " + bad.front());
  return l;
}

namespace {

// Half-slot sides around a node, counterclockwise: side 0 is the clockwise
// side of a slot, side 1 the counterclockwise side.  A doubled arc joins the
// ccw side at one end to the cw side at the other, which keeps "left of the
// strand" consistent along the band.
constexpr int kCw = 0, kCcw = 1;

struct DoubleBuilder {
  const Diagram& d;
  BandedLink out;
  // For each original crossing, the four new crossings: diamond positions
  // north, east, south, west.
  std::vector<std::array<int, 4>> quad;  // [N, E, S, W]
  std::vector<std::vector<std::array<int, 2>>> vertex_junction;  // [node][slot][side]

  explicit DoubleBuilder(const Diagram& diagram) : d(diagram) {}

  int crossing_port(int node, int slot, int side) {
    // With the understrand entering the region at slots 0 (SW) and 2 (NE)
    // and the overstrand at 1 (SE) and 3 (NW), the four doubled crossings
    // sit at the diamond N,E,S,W and the outer half-slots map as below.
    const auto& q = quad[node];
    const int N = q[0], E = q[1], S = q[2], W = q[3];
    switch (slot * 2 + side) {
      case 0 * 2 + kCcw: return out.port(S, 0);
      case 0 * 2 + kCw: return out.port(W, 0);
      case 1 * 2 + kCcw: return out.port(E, 1);
      case 1 * 2 + kCw: return out.port(S, 1);
      case 2 * 2 + kCcw: return out.port(N, 2);
      case 2 * 2 + kCw: return out.port(E, 2);
      case 3 * 2 + kCcw: return out.port(W, 3);
      case 3 * 2 + kCw: return out.port(N, 3);
    }
    throw std::logic_error("bad half slot");
  }

  int port_of(int node, int slot, int side) {
    if (d.nodes[node].kind == NodeKind::Crossing) return crossing_port(node, slot, side);
    return vertex_junction[node][slot][side];
  }

  void build() {
    quad.assign(d.nodes.size(), {-1, -1, -1, -1});
    vertex_junction.assign(d.nodes.size(), {});
    // Allocate crossings first so junction ports stay above them.
    for (size_t ni = 0; ni < d.nodes.size(); ++ni) {
      if (d.nodes[ni].kind != NodeKind::Crossing) continue;
      // Flow on the doubled crossings is fixed by the oppositely-directed
      // convention: N,W carry understrand flow 0->2, N,E overstrand 3->1.
      int N = out.new_crossing(true, false);
      int E = out.new_crossing(false, false);
      int S = out.new_crossing(false, true);
      int W = out.new_crossing(true, true);
      quad[ni] = {N, E, S, W};
    }
    for (size_t ni = 0; ni < d.nodes.size(); ++ni) {
      if (d.nodes[ni].kind != NodeKind::Vertex) continue;
      vertex_junction[ni].resize(d.nodes[ni].slots);
      for (int s = 0; s < d.nodes[ni].slots; ++s)
        vertex_junction[ni][s] = {out.new_junction(), out.new_junction()};
    }
    // Internal pieces of each doubled crossing.
    for (size_t ni = 0; ni < d.nodes.size(); ++ni) {
      if (d.nodes[ni].kind != NodeKind::Crossing) continue;
      const auto& q = quad[ni];
      const int N = q[0], E = q[1], S = q[2], W = q[3];
      out.pieces.push_back({out.port(W, 2), out.port(N, 0)});
      out.pieces.push_back({out.port(S, 2), out.port(E, 0)});
      out.pieces.push_back({out.port(N, 1), out.port(E, 3)});
      out.pieces.push_back({out.port(W, 1), out.port(S, 3)});
    }
    // Vertex disks join cyclically adjacent strand pairs.
    for (size_t ni = 0; ni < d.nodes.size(); ++ni) {
      if (d.nodes[ni].kind != NodeKind::Vertex) continue;
      const int k = d.nodes[ni].slots;
      for (int s = 0; s < k; ++s)
        out.pieces.push_back(
            {vertex_junction[ni][s][kCcw], vertex_junction[ni][(s + 1) % k][kCw]});
    }
    // Doubled arcs: ccw side at the tail end to cw side at the head end.
    std::vector<std::array<int, 2>> arc_copy(d.arcs.size());  // [left, right] piece ids
    for (size_t ai = 0; ai < d.arcs.size(); ++ai) {
      const Arc& a = d.arcs[ai];
      int left = static_cast<int>(out.pieces.size());
      out.pieces.push_back({port_of(a.from.node, a.from.slot, kCcw),
                            port_of(a.to.node, a.to.slot, kCw)});
      int right = static_cast<int>(out.pieces.size());
      out.pieces.push_back({port_of(a.from.node, a.from.slot, kCw),
                            port_of(a.to.node, a.to.slot, kCcw)});
      arc_copy[ai] = {left, right};
    }
    for (const Edge& e : d.edges) {
      BandedLink::Band band;
      band.left_piece = arc_copy[e.arcs.front()][0];
      band.right_piece = arc_copy[e.arcs.front()][1];
      band.left_tail_first = true;
      band.right_tail_first = true;
      out.bands[e.name] = band;
    }
    out.free_loops = 2 * d.free_loops;
  }
};

}  // namespace

BandedLink double_banded(const Diagram& d) {
  DoubleBuilder builder(d);
  builder.build();
  return builder.out;
}

LinkDiagram double_diagram(const Diagram& d) { return double_banded(d).to_link(); }

void insert_half_twists(BandedLink& link, const std::string& band_name, int n) {
  auto it = link.bands.find(band_name);
  if (it == link.bands.end()) throw std::invalid_argument("unknown band '" + band_name + "'");
  if (n == 0) return;
  BandedLink::Band& band = it->second;
  // Allocate all crossings first: growing the crossing range renumbers the
  // junction ports stored in pieces, so endpoints are read afterwards.
  std::vector<int> twist_crossings;
  for (int k = 0; k < std::abs(n); ++k)
    twist_crossings.push_back(link.new_crossing(n < 0, false));
  const auto left = link.pieces[band.left_piece];
  const auto right = link.pieces[band.right_piece];
  const int tail_left = band.left_tail_first ? left.first : left.second;
  const int head_left = band.left_tail_first ? left.second : left.first;
  const int tail_right = band.right_tail_first ? right.first : right.second;
  const int head_right = band.right_tail_first ? right.second : right.first;

  // Cut both strands and chain |n| crossings between the stubs.  Positive
  // twists: the strand from the lower left crosses over to the upper right
  // (slots: lower-left 3, lower-right 0, upper-right 1, upper-left 2);
  // negative twists are the mirror wiring.  The strands swap sides at each
  // crossing, so the boundary flow through consecutive crossings alternates;
  // the flags below encode it so that every twist crossing carries sign
  // -sgn(n) under the oppositely-directed band orientation.
  int cur_left = tail_left, cur_right = tail_right;
  std::vector<std::pair<int, int>> fresh;
  for (size_t k = 0; k < twist_crossings.size(); ++k) {
    const int c = twist_crossings[k];
    const bool swapped = (k % 2) == 1;
    if (n > 0) {
      link.under_flow02[c] = swapped ? 1 : 0;
      link.over_flow13[c] = swapped ? 1 : 0;
      fresh.push_back({link.port(c, 3), cur_left});
      fresh.push_back({link.port(c, 0), cur_right});
      cur_left = link.port(c, 2);
      cur_right = link.port(c, 1);
    } else {
      link.under_flow02[c] = swapped ? 0 : 1;
      link.over_flow13[c] = swapped ? 1 : 0;
      fresh.push_back({link.port(c, 0), cur_left});
      fresh.push_back({link.port(c, 1), cur_right});
      cur_left = link.port(c, 3);
      cur_right = link.port(c, 2);
    }
  }
  fresh.push_back({cur_left, head_left});
  fresh.push_back({cur_right, head_right});
  // Replace the original copies by the twist chain.
  link.pieces[band.left_piece] = fresh[0];
  link.pieces[band.right_piece] = fresh[1];
  for (size_t k = 2; k < fresh.size(); ++k) link.pieces.push_back(fresh[k]);
  band.left_piece = static_cast<int>(link.pieces.size()) - 2;
  band.right_piece = static_cast<int>(link.pieces.size()) - 1;
  band.left_tail_first = true;  // endpoint 0 of the final pieces faces the twists
  band.right_tail_first = true;
  band.inserted_twists += n;
}

void smooth_band(BandedLink& link, const std::string& band_name) {
  auto it = link.bands.find(band_name);
  if (it == link.bands.end()) throw std::invalid_argument("unknown band '" + band_name + "'");
  BandedLink::Band& band = it->second;
  auto left = link.pieces[band.left_piece];
  auto right = link.pieces[band.right_piece];
  int tail_left = band.left_tail_first ? left.first : left.second;
  int head_left = band.left_tail_first ? left.second : left.first;
  int tail_right = band.right_tail_first ? right.first : right.second;
  int head_right = band.right_tail_first ? right.second : right.first;
  link.pieces[band.left_piece] = {tail_left, tail_right};
  link.pieces[band.right_piece] = {head_left, head_right};
}

int BarDiagram::bar_count() const {
  int n = 0;
  for (const auto& [name, parity] : bar) n += parity;
  return n;
}

std::vector<std::string> BarDiagram::barred_edges() const {
  std::vector<std::string> out;
  for (const auto& [name, parity] : bar)
    if (parity) out.push_back(name);
  return out;
}

LinkDiagram BarDiagram::resolve(unsigned long turnback_mask) const {
  BandedLink banded = double_banded(source);
  auto edges = barred_edges();
  for (size_t i = 0; i < edges.size(); ++i)
    if (turnback_mask & (1UL << i)) smooth_band(banded, edges[i]);
  return banded.to_link();
}

BarDiagram bar_diagram(const Diagram& d) {
  BarDiagram b;
  b.source = d;
  // The construction starts with one bar per arc; sliding them together
  // along the band and collapsing adjacent pairs (two bars equal one bar,
  // not zero) leaves exactly one bar on every edge.
  for (const Edge& e : d.edges) b.bar[e.name] = 1;
  return b;
}

}  // namespace sgpoly
