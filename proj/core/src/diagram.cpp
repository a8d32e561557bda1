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

#include "sgpoly/diagram.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sgpoly {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

int port_id(const Diagram& d, const std::vector<int>& offset, int node, int slot) {
  (void)d;
  return offset[node] + slot;
}

std::vector<int> port_offsets(const Diagram& d, int& total) {
  std::vector<int> offset(d.nodes.size(), 0);
  total = 0;
  for (size_t i = 0; i < d.nodes.size(); ++i) {
    offset[i] = total;
    total += d.nodes[i].slots;
  }
  return offset;
}

}  // namespace

std::string to_string(GraphKind k) {
  switch (k) {
    case GraphKind::K4: return "K4";
    case GraphKind::Theta: return "theta";
    case GraphKind::Knot: return "knot";
    case GraphKind::Link: return "link";
    case GraphKind::Other: return "other";
  }
  return "?";
}

int SpatialGraphDiagram::node_index(const std::string& name) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].name == name) return static_cast<int>(i);
  return -1;
}

const Edge* SpatialGraphDiagram::find_edge(const std::string& name) const {
  for (const auto& e : edges)
    if (e.name == name) return &e;
  return nullptr;
}

int SpatialGraphDiagram::crossing_count() const {
  int n = 0;
  for (const auto& node : nodes) n += node.kind == NodeKind::Crossing;
  return n;
}

int SpatialGraphDiagram::vertex_count() const {
  return static_cast<int>(nodes.size()) - crossing_count();
}

std::vector<int> SpatialGraphDiagram::crossing_nodes() const {
  std::vector<int> out;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].kind == NodeKind::Crossing) out.push_back(static_cast<int>(i));
  return out;
}

int SpatialGraphDiagram::arc_at(int node, int slot) const {
  for (size_t i = 0; i < arcs.size(); ++i) {
    if ((arcs[i].from.node == node && arcs[i].from.slot == slot) ||
        (arcs[i].to.node == node && arcs[i].to.slot == slot))
      return static_cast<int>(i);
  }
  return -1;
}

// ---------------------------------------------------------------------------
// Validation

std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> bad;
  auto complain = [&](const std::string& s) { bad.push_back(s); };

  for (size_t i = 0; i < d.nodes.size(); ++i) {
    const Node& n = d.nodes[i];
    if (n.kind == NodeKind::Crossing && n.slots != 4)
      complain("crossing '" + n.name + "' must have 4 slots");
    if (n.kind == NodeKind::Vertex && n.slots < 1)
      complain("vertex '" + n.name + "' has no slots");
    for (size_t j = i + 1; j < d.nodes.size(); ++j)
      if (d.nodes[j].name == n.name) complain("duplicate node id '" + n.name + "'");
  }
  if (d.free_loops < 0) complain("negative free_loops");

  // Every slot is used by exactly one arc endpoint.
  std::map<std::pair<int, int>, int> use;
  auto touch = [&](const Endpoint& p) {
    if (p.node < 0 || p.node >= static_cast<int>(d.nodes.size())) {
      complain("arc endpoint references unknown node");
      return;
    }
    if (p.slot < 0 || p.slot >= d.nodes[p.node].slots) {
      complain("arc endpoint references invalid slot " + std::to_string(p.slot) + " of '" +
               d.nodes[p.node].name + "'");
      return;
    }
    use[{p.node, p.slot}]++;
  };
  for (const Arc& a : d.arcs) {
    touch(a.from);
    touch(a.to);
  }
  for (size_t i = 0; i < d.nodes.size(); ++i)
    for (int s = 0; s < d.nodes[i].slots; ++s) {
      int c = use.count({(int)i, s}) ? use[{(int)i, s}] : 0;
      if (c != 1)
        complain("slot " + std::to_string(s) + " of '" + d.nodes[i].name + "' used " +
                 std::to_string(c) + " times (slot reuse or gap)");
    }
  if (!bad.empty()) return bad;  // structure too broken for deeper checks

  // Edge paths.
  std::vector<int> owner(d.arcs.size(), -1);
  for (size_t ei = 0; ei < d.edges.size(); ++ei) {
    const Edge& e = d.edges[ei];
    if (e.tail < 0 || e.head < 0 || e.tail >= (int)d.nodes.size() ||
        e.head >= (int)d.nodes.size() || d.nodes[e.tail].kind != NodeKind::Vertex ||
        d.nodes[e.head].kind != NodeKind::Vertex) {
      complain("edge '" + e.name + "' endpoints must be vertices");
      continue;
    }
    if (e.arcs.empty()) {
      complain("edge '" + e.name + "' has no arcs");
      continue;
    }
    bool ok = true;
    for (size_t k = 0; k < e.arcs.size(); ++k) {
      int ai = e.arcs[k];
      if (ai < 0 || ai >= (int)d.arcs.size()) {
        complain("edge '" + e.name + "' references unknown arc");
        ok = false;
        break;
      }
      if (owner[ai] != -1) {
        complain("arc " + std::to_string(ai) + " appears in two edges");
        ok = false;
      }
      owner[ai] = static_cast<int>(ei);
    }
    if (!ok) continue;
    const Arc& first = d.arcs[e.arcs.front()];
    const Arc& last = d.arcs[e.arcs.back()];
    if (first.from.node != e.tail)
      complain("edge '" + e.name + "' does not start at its tail vertex");
    if (last.to.node != e.head) complain("edge '" + e.name + "' does not end at its head vertex");
    for (size_t k = 0; k + 1 < e.arcs.size(); ++k) {
      const Arc& a = d.arcs[e.arcs[k]];
      const Arc& b = d.arcs[e.arcs[k + 1]];
      if (a.to.node != b.from.node || d.nodes[a.to.node].kind != NodeKind::Crossing ||
          (a.to.slot + 2) % 4 != b.from.slot) {
        complain("edge '" + e.name + "' breaks at arc " + std::to_string(k) +
                 " (must pass straight through a crossing)");
      }
    }
  }

  // Arcs at vertices must be owned by edges; passages have one owner.
  for (size_t ai = 0; ai < d.arcs.size(); ++ai) {
    const Arc& a = d.arcs[ai];
    if ((d.nodes[a.from.node].kind == NodeKind::Vertex ||
         d.nodes[a.to.node].kind == NodeKind::Vertex) &&
        owner[ai] == -1)
      complain("arc " + std::to_string(ai) + " touches a vertex but belongs to no edge");
  }
  for (size_t ni = 0; ni < d.nodes.size(); ++ni) {
    if (d.nodes[ni].kind != NodeKind::Crossing) continue;
    for (int s : {0, 1}) {
      int a1 = d.arc_at((int)ni, s);
      int a2 = d.arc_at((int)ni, s + 2);
      if (a1 < 0 || a2 < 0) continue;
      if (owner[a1] != owner[a2])
        complain("strand changes edge inside crossing '" + d.nodes[ni].name + "'");
      // Flow: one endpoint in, the partner out.
      bool in1 = d.arcs[a1].to == Endpoint{(int)ni, s};
      bool in2 = d.arcs[a2].to == Endpoint{(int)ni, (s + 2) % 4};
      if (in1 == in2)
        complain("incoherent strand direction through crossing '" + d.nodes[ni].name + "'");
    }
  }

  // Inputs carrying the full a1..a6 labelling must match the reference
  // incidence pattern and orientations.
  bool all_a_labels = true;
  for (int i = 1; i <= 6; ++i) all_a_labels = all_a_labels && d.find_edge("a" + std::to_string(i));
  if (all_a_labels) {
    if (d.edges.size() != 6 || d.vertex_count() != 4)
      complain("a1..a6 labels present but diagram is not a complete 4-vertex graph");
    else if (classify(d) != GraphKind::K4)
      complain("edge labels a1..a6 do not follow the reference orientation pattern");
  }
  return bad;
}

GraphKind classify(const Diagram& d) {
  const int nv = d.vertex_count();
  if (nv == 0) return GraphKind::Link;
  // Degree per vertex.
  std::map<int, int> degree;
  for (const auto& e : d.edges) {
    degree[e.tail]++;
    degree[e.head]++;
  }
  if (nv == 4 && d.edges.size() == 6) {
    const Edge* a[7];
    bool all = true;
    for (int i = 1; i <= 6; ++i) {
      a[i] = d.find_edge("a" + std::to_string(i));
      all = all && a[i];
    }
    if (all) {
      int u = a[1]->tail, p = a[1]->head, q = a[2]->head, w = a[3]->head;
      std::set<int> verts{u, p, q, w};
      if (verts.size() == 4 && a[2]->tail == u && a[3]->tail == u && a[6]->tail == p &&
          a[6]->head == q && a[4]->tail == q && a[4]->head == w && a[5]->tail == w &&
          a[5]->head == p)
        return GraphKind::K4;
    }
  }
  if (nv == 2 && d.edges.size() == 3) {
    int v0 = -1, v1 = -1;
    for (size_t i = 0; i < d.nodes.size(); ++i)
      if (d.nodes[i].kind == NodeKind::Vertex) (v0 < 0 ? v0 : v1) = static_cast<int>(i);
    bool ok = true;
    for (const auto& e : d.edges)
      ok = ok && ((e.tail == v0 && e.head == v1) || (e.tail == v1 && e.head == v0));
    if (ok && degree[v0] == 3 && degree[v1] == 3) return GraphKind::Theta;
  }
  // A knot: every vertex 2-valent and the edges form a single closed walk.
  bool all2 = true;
  for (size_t i = 0; i < d.nodes.size(); ++i)
    if (d.nodes[i].kind == NodeKind::Vertex && degree[(int)i] != 2) all2 = false;
  if (all2 && !d.edges.empty()) {
    // Walk the cycle.
    std::set<std::string> seen;
    const Edge* cur = &d.edges[0];
    int at = cur->head;
    seen.insert(cur->name);
    while (true) {
      const Edge* next = nullptr;
      for (const auto& e : d.edges) {
        if (seen.count(e.name)) continue;
        if (e.tail == at || e.head == at) {
          next = &e;
          break;
        }
      }
      if (!next) break;
      seen.insert(next->name);
      at = next->tail == at ? next->head : next->tail;
    }
    if (seen.size() == d.edges.size() && at == d.edges[0].tail && d.free_loops == 0)
      return GraphKind::Knot;
  }
  return GraphKind::Other;
}

// ---------------------------------------------------------------------------
// Signs and writhe

int crossing_sign(const Diagram& d, int crossing_node) {
  // Flow of each passage from arc endpoint roles: the arc whose `to` lands on
  // the crossing carries flow in.
  int under_in = -1, over_in = -1;
  for (int s = 0; s < 4; ++s) {
    int ai = d.arc_at(crossing_node, s);
    if (ai < 0) throw std::logic_error("dangling crossing slot");
    bool incoming = d.arcs[ai].to == Endpoint{crossing_node, s};
    if (incoming) ((s % 2 == 0) ? under_in : over_in) = s;
  }
  if (under_in < 0 || over_in < 0) throw std::invalid_argument("crossing without coherent flow");
  const bool under02 = under_in == 0;
  const bool over13 = over_in == 1;
  return over13 != under02 ? 1 : -1;
}

int writhe(const Diagram& d) {
  int w = 0;
  for (int c : d.crossing_nodes()) w += crossing_sign(d, c);
  return w;
}

// ---------------------------------------------------------------------------
// Mirror and disjoint union

Diagram mirror(const Diagram& d) {
  // Switching over/under keeps the counterclockwise slot order if the old
  // overstrand slots 1,3 are renamed to 0,2: every slot moves back by one.
  Diagram m(d);
  auto remap = [&](Endpoint& p) {
    if (m.nodes[p.node].kind == NodeKind::Crossing) p.slot = (p.slot + 3) % 4;
  };
  for (Arc& a : m.arcs) {
    remap(a.from);
    remap(a.to);
  }
  return m;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  Diagram u(a);
  const int node_base = static_cast<int>(u.nodes.size());
  const int arc_base = static_cast<int>(u.arcs.size());
  std::set<std::string> names;
  for (const auto& n : a.nodes) names.insert(n.name);
  for (const auto& n : b.nodes) {
    Node copy(n);
    while (names.count(copy.name)) copy.name += "'";
    names.insert(copy.name);
    u.nodes.push_back(copy);
  }
  for (const auto& arc : b.arcs) {
    Arc copy(arc);
    copy.from.node += node_base;
    copy.to.node += node_base;
    u.arcs.push_back(copy);
  }
  std::set<std::string> edge_names;
  for (const auto& e : a.edges) edge_names.insert(e.name);
  for (const auto& e : b.edges) {
    Edge copy(e);
    while (edge_names.count(copy.name)) copy.name += "'";
    edge_names.insert(copy.name);
    copy.tail += node_base;
    copy.head += node_base;
    for (int& ai : copy.arcs) ai += arc_base;
    u.edges.push_back(copy);
  }
  u.free_loops += b.free_loops;
  return u;
}

// ---------------------------------------------------------------------------
// Edge deletion

namespace {

struct StrandWalker {
  const Diagram& d;
  std::vector<int> owner;  // arc -> edge index or -1

  explicit StrandWalker(const Diagram& diagram) : d(diagram), owner(diagram.arcs.size(), -1) {
    for (size_t ei = 0; ei < d.edges.size(); ++ei)
      for (int ai : d.edges[ei].arcs) owner[ai] = static_cast<int>(ei);
  }
};

}  // namespace

Diagram delete_edges(const Diagram& d, const std::set<std::string>& keep) {
  StrandWalker w(d);
  std::vector<bool> edge_kept(d.edges.size(), false);
  for (size_t ei = 0; ei < d.edges.size(); ++ei) edge_kept[ei] = keep.count(d.edges[ei].name) > 0;
  auto arc_kept = [&](int ai) { return w.owner[ai] == -1 || edge_kept[w.owner[ai]]; };

  // Crossing fate: survive (both strands kept), dissolve (one), vanish (none).
  enum Fate { Survive, Dissolve, Vanish };
  std::vector<Fate> fate(d.nodes.size(), Survive);
  for (size_t ni = 0; ni < d.nodes.size(); ++ni) {
    const Node& n = d.nodes[ni];
    if (n.kind == NodeKind::Crossing) {
      bool under = arc_kept(d.arc_at((int)ni, 0));
      bool over = arc_kept(d.arc_at((int)ni, 1));
      fate[ni] = under && over ? Survive : (under || over ? Dissolve : Vanish);
    } else {
      int kept_slots = 0;
      for (int s = 0; s < n.slots; ++s) kept_slots += arc_kept(d.arc_at((int)ni, s));
      fate[ni] = kept_slots == 0 ? Vanish : (kept_slots == 2 ? Dissolve : Survive);
    }
  }

  // Map surviving nodes, compacting vertex slots in cyclic order.
  Diagram out;
  std::vector<int> node_map(d.nodes.size(), -1);
  std::vector<std::vector<int>> slot_map(d.nodes.size());
  for (size_t ni = 0; ni < d.nodes.size(); ++ni) {
    if (fate[ni] != Survive) continue;
    const Node& n = d.nodes[ni];
    Node copy(n);
    if (n.kind == NodeKind::Vertex) {
      slot_map[ni].assign(n.slots, -1);
      int next = 0;
      for (int s = 0; s < n.slots; ++s)
        if (arc_kept(d.arc_at((int)ni, s))) slot_map[ni][s] = next++;
      copy.slots = next;
    } else {
      slot_map[ni] = {0, 1, 2, 3};
    }
    node_map[ni] = static_cast<int>(out.nodes.size());
    out.nodes.push_back(copy);
  }

  // Walk maximal kept strands between surviving nodes.  following an arc in
  // its stored direction; `enter` is the endpoint we land on.
  auto continue_through = [&](Endpoint at) -> std::optional<Endpoint> {
    // Returns the slot where the strand leaves a dissolved node, or nullopt
    // when `at.node` survives.
    if (fate[at.node] == Survive) return std::nullopt;
    if (d.nodes[at.node].kind == NodeKind::Crossing) return Endpoint{at.node, (at.slot + 2) % 4};
    // Dissolved 2-valent vertex: leave by the other kept slot.
    for (int s = 0; s < d.nodes[at.node].slots; ++s) {
      if (s == at.slot) continue;
      if (arc_kept(d.arc_at(at.node, s))) return Endpoint{at.node, s};
    }
    throw std::logic_error("dissolved vertex with no exit");
  };

  std::vector<bool> visited(d.arcs.size(), false);
  struct Chain {
    Endpoint start, end;          // surviving node endpoints
    std::vector<int> arcs;        // original arc ids in walk order
    std::vector<bool> forward;    // arc traversed from->to?
  };

  // Walk from `from` (a surviving-node endpoint) along the strand.
  auto walk_chain = [&](Endpoint from) -> Chain {
    Chain chain;
    chain.start = from;
    Endpoint at = from;
    while (true) {
      int ai = d.arc_at(at.node, at.slot);
      const Arc& a = d.arcs[ai];
      bool fwd = a.from == at;
      visited[ai] = true;
      chain.arcs.push_back(ai);
      chain.forward.push_back(fwd);
      Endpoint land = fwd ? a.to : a.from;
      auto exit = continue_through(land);
      if (!exit) {
        chain.end = land;
        return chain;
      }
      at = *exit;
    }
  };

  // New arcs: one per chain.  Edge rebuilding walks vertex-to-vertex paths
  // through surviving crossings.
  std::map<std::pair<int, int>, int> new_arc_at;  // (new node, slot) -> new arc
  std::vector<Chain> chains;
  auto emit_chain = [&](const Chain& c) {
    Endpoint f{node_map[c.start.node], slot_map[c.start.node][c.start.slot]};
    Endpoint t{node_map[c.end.node], slot_map[c.end.node][c.end.slot]};
    out.arcs.push_back({f, t});
    int id = static_cast<int>(out.arcs.size()) - 1;
    new_arc_at[{f.node, f.slot}] = id;
    new_arc_at[{t.node, t.slot}] = id;
    chains.push_back(c);
    return id;
  };

  // First pass: chains starting at surviving nodes.
  for (size_t ni = 0; ni < d.nodes.size(); ++ni) {
    if (fate[ni] != Survive) continue;
    for (int s = 0; s < d.nodes[ni].slots; ++s) {
      int ai = d.arc_at((int)ni, s);
      if (ai < 0 || !arc_kept(ai) || visited[ai]) continue;
      emit_chain(walk_chain({(int)ni, s}));
    }
  }
  // Second pass: closed strands with no surviving node become free loops.
  for (size_t ai = 0; ai < d.arcs.size(); ++ai) {
    if (visited[ai] || !arc_kept(ai)) continue;
    Endpoint cur = d.arcs[ai].from;
    while (true) {
      int k = d.arc_at(cur.node, cur.slot);
      if (visited[k]) break;
      visited[k] = true;
      const Arc& a = d.arcs[k];
      Endpoint land = (a.from == cur) ? a.to : a.from;
      auto ex = continue_through(land);
      if (!ex) throw std::logic_error("closed strand reached surviving node");
      cur = *ex;
    }
    out.free_loops += 1;
  }
  out.free_loops += d.free_loops;

  // Rebuild edges: start at each surviving vertex slot not yet used by an
  // out-edge, walk chain-by-chain through surviving crossings to the next
  // vertex.
  std::vector<bool> chain_used(chains.size(), false);
  std::map<std::pair<int, int>, int> chain_at;  // original surviving endpoint -> chain id
  for (size_t ci = 0; ci < chains.size(); ++ci) {
    chain_at[{chains[ci].start.node, chains[ci].start.slot}] = static_cast<int>(ci);
    chain_at[{chains[ci].end.node, chains[ci].end.slot}] = static_cast<int>(ci);
  }

  auto constituents_of = [&](const Chain& c, bool reversed) {
    std::vector<std::pair<std::string, bool>> names;  // (edge, traversed forward?)
    for (size_t k = 0; k < c.arcs.size(); ++k) {
      size_t idx = reversed ? c.arcs.size() - 1 - k : k;
      int own = w.owner[c.arcs[idx]];
      if (own < 0) continue;
      bool fwd = c.forward[idx] != reversed;
      if (names.empty() || names.back().first != d.edges[own].name)
        names.emplace_back(d.edges[own].name, fwd);
    }
    return names;
  };

  for (size_t ni = 0; ni < d.nodes.size(); ++ni) {
    if (fate[ni] != Survive || d.nodes[ni].kind != NodeKind::Vertex) continue;
    for (int s = 0; s < d.nodes[ni].slots; ++s) {
      if (!arc_kept(d.arc_at((int)ni, s))) continue;
      auto it = chain_at.find({(int)ni, s});
      if (it == chain_at.end() || chain_used[it->second]) continue;
      // Walk to the far vertex.
      Edge e;
      e.tail = node_map[ni];
      std::vector<std::pair<std::string, bool>> parts;
      Endpoint at{(int)ni, s};
      while (true) {
        int ci = chain_at.at({at.node, at.slot});
        const Chain& c = chains[ci];
        bool reversed = !(c.start == at);
        chain_used[ci] = true;
        for (auto& nm : constituents_of(c, reversed))
          if (parts.empty() || parts.back().first != nm.first) parts.push_back(nm);
        int arc_id = new_arc_at.at({node_map[at.node], slot_map[at.node][at.slot]});
        // Orient the new arc along the walk.
        Endpoint far = reversed ? c.start : c.end;
        Endpoint nf{node_map[at.node], slot_map[at.node][at.slot]};
        Endpoint nt{node_map[far.node], slot_map[far.node][far.slot]};
        out.arcs[arc_id] = {nf, nt};
        e.arcs.push_back(arc_id);
        if (d.nodes[far.node].kind == NodeKind::Vertex) {
          e.head = node_map[far.node];
          break;
        }
        at = {far.node, (far.slot + 2) % 4};
      }
      // Single intact edge keeps its own direction; merged strands run in
      // walk order unless the first constituent was traversed backwards.
      std::string name;
      for (auto& [nm, fwd] : parts) name += (name.empty() ? "" : "+") + nm;
      e.name = name.empty() ? "e" : name;
      bool flip = !parts.empty() && !parts.front().second;
      if (flip) {
        std::reverse(e.arcs.begin(), e.arcs.end());
        for (int ai : e.arcs) std::swap(out.arcs[ai].from, out.arcs[ai].to);
        std::swap(e.tail, e.head);
        std::string rname;
        for (auto it2 = parts.rbegin(); it2 != parts.rend(); ++it2)
          rname += (rname.empty() ? "" : "+") + it2->first;
        e.name = rname;
      }
      while (out.find_edge(e.name)) e.name += "'";
      out.edges.push_back(e);
    }
  }
  return out;
}

Diagram as_knot_graph(const Diagram& d, const std::string& edge_name) {
  if (d.vertex_count() != 0)
    throw std::invalid_argument("as_knot_graph expects a vertex-free diagram");
  Diagram out(d);
  if (out.arcs.empty()) {
    if (out.free_loops != 1) throw std::invalid_argument("as_knot_graph expects one component");
    out.free_loops = 0;
    Node v{NodeKind::Vertex, "v", 2};
    out.nodes.push_back(v);
    int vi = static_cast<int>(out.nodes.size()) - 1;
    out.arcs.push_back({{vi, 0}, {vi, 1}});
    out.edges.push_back({edge_name, vi, vi, {0}});
    return out;
  }
  if (out.free_loops != 0) throw std::invalid_argument("as_knot_graph expects one component");
  // Split arc 0 at a new 2-valent vertex and walk the closed strand,
  // reorienting arcs along the walk so the edge path is coherent.
  Node v{NodeKind::Vertex, "v", 2};
  out.nodes.push_back(v);
  int vi = static_cast<int>(out.nodes.size()) - 1;
  Arc first = out.arcs[0];
  out.arcs[0] = {{vi, 1}, first.to};
  out.arcs.push_back({first.from, {vi, 0}});
  Edge e;
  e.name = edge_name;
  e.tail = vi;
  e.head = vi;
  Endpoint at{vi, 1};
  while (true) {
    int ai = out.arc_at(at.node, at.slot);
    Arc& a = out.arcs[ai];
    if (!(a.from == at)) std::swap(a.from, a.to);
    e.arcs.push_back(ai);
    Endpoint land = a.to;
    if (land.node == vi) break;
    at = {land.node, (land.slot + 2) % 4};
  }
  if (e.arcs.size() != out.arcs.size())
    throw std::invalid_argument("as_knot_graph expects a single closed component");
  out.edges.push_back(e);
  return out;
}

Diagram rebuild_edges(const Diagram& d) {
  Diagram out(d);
  out.edges.clear();
  std::vector<bool> visited(out.arcs.size(), false);
  int counter = 0;
  for (size_t ni = 0; ni < out.nodes.size(); ++ni) {
    if (out.nodes[ni].kind != NodeKind::Vertex) continue;
    for (int s = 0; s < out.nodes[ni].slots; ++s) {
      int ai = out.arc_at((int)ni, s);
      if (ai < 0 || visited[ai]) continue;
      Edge e;
      e.name = "e" + std::to_string(++counter);
      e.tail = static_cast<int>(ni);
      Endpoint at{(int)ni, s};
      while (true) {
        int k = out.arc_at(at.node, at.slot);
        visited[k] = true;
        Arc& a = out.arcs[k];
        if (!(a.from == at)) std::swap(a.from, a.to);
        e.arcs.push_back(k);
        Endpoint land = a.to;
        if (out.nodes[land.node].kind == NodeKind::Vertex) {
          e.head = land.node;
          break;
        }
        at = {land.node, (land.slot + 2) % 4};
      }
      out.edges.push_back(e);
    }
  }
  // Closed crossing-only strands: make the arc directions coherent too.
  for (size_t ai = 0; ai < out.arcs.size(); ++ai) {
    if (visited[ai]) continue;
    Endpoint at = out.arcs[ai].from;
    while (true) {
      int k = out.arc_at(at.node, at.slot);
      if (visited[k]) break;
      visited[k] = true;
      Arc& a = out.arcs[k];
      if (!(a.from == at)) std::swap(a.from, a.to);
      at = {a.to.node, (a.to.slot + 2) % 4};
    }
  }
  return out;
}

Diagram apply_crossing_state(const Diagram& d, int crossing_node, int state) {
  if (crossing_node < 0 || crossing_node >= (int)d.nodes.size() ||
      d.nodes[crossing_node].kind != NodeKind::Crossing)
    throw std::invalid_argument("apply_crossing_state: not a crossing");
  Diagram raw(d);
  raw.edges.clear();
  if (state == 0) {
    raw.nodes[crossing_node].kind = NodeKind::Vertex;
    return rebuild_edges(raw);
  }
  if (state != 1 && state != -1)
    throw std::invalid_argument("apply_crossing_state: state must be +1, -1 or 0");
  // Splice the four strand ends pairwise and drop the node.
  auto mate_of = [&](int slot) {
    int ai = raw.arc_at(crossing_node, slot);
    const Arc& a = raw.arcs[ai];
    return a.from == Endpoint{crossing_node, slot} ? a.to : a.from;
  };
  const std::array<std::array<int, 2>, 2> joins =
      state == 1 ? std::array<std::array<int, 2>, 2>{{{0, 1}, {2, 3}}}
                 : std::array<std::array<int, 2>, 2>{{{1, 2}, {3, 0}}};
  std::vector<Arc> new_arcs;
  std::set<int> old_arcs;
  for (int s = 0; s < 4; ++s) old_arcs.insert(raw.arc_at(crossing_node, s));
  for (auto [s1, s2] : joins) {
    Endpoint a = mate_of(s1), b = mate_of(s2);
    int a1 = raw.arc_at(crossing_node, s1), a2 = raw.arc_at(crossing_node, s2);
    if (a1 == a2) {
      raw.free_loops++;  // the smoothing closes the little loop at the crossing
    } else if (a.node == crossing_node) {
      // The partner join will see this arc again; handled there.
      // Chain: arc s1 connects two slots of this crossing; merge through.
      // Resolve by following: replaced below via generic merging.
      new_arcs.push_back({a, b});
    } else {
      new_arcs.push_back({a, b});
    }
  }
  // Handle arcs that connect two slots of the removed crossing across the
  // two joins (e.g. slot 0 to slot 2): the two new arcs above then share a
  // phantom endpoint at the crossing and must be merged.
  bool again = true;
  while (again) {
    again = false;
    for (size_t i = 0; i < new_arcs.size() && !again; ++i) {
      for (size_t j = 0; j < new_arcs.size() && !again; ++j) {
        if (i == j) continue;
        auto touches = [&](const Arc& a) {
          return a.from.node == crossing_node || a.to.node == crossing_node;
        };
        if (!touches(new_arcs[i]) || !touches(new_arcs[j])) continue;
        // merge i and j at the phantom endpoint
        Endpoint ia = new_arcs[i].from.node == crossing_node ? new_arcs[i].to : new_arcs[i].from;
        Endpoint ja = new_arcs[j].from.node == crossing_node ? new_arcs[j].to : new_arcs[j].from;
        new_arcs[i] = {ia, ja};
        new_arcs.erase(new_arcs.begin() + j);
        again = true;
      }
    }
  }
  for (auto& a : new_arcs)
    if (a.from.node == crossing_node && a.to.node == crossing_node) {
      raw.free_loops++;
      a = {{-2, -2}, {-2, -2}};
    }
  Diagram slim;
  slim.free_loops = raw.free_loops;
  std::vector<int> node_map(raw.nodes.size(), -1);
  for (size_t ni = 0; ni < raw.nodes.size(); ++ni) {
    if ((int)ni == crossing_node) continue;
    node_map[ni] = static_cast<int>(slim.nodes.size());
    slim.nodes.push_back(raw.nodes[ni]);
  }
  auto push_arc = [&](Arc a) {
    if (a.from.node == -2) return;
    a.from.node = node_map[a.from.node];
    a.to.node = node_map[a.to.node];
    slim.arcs.push_back(a);
  };
  for (size_t ai = 0; ai < raw.arcs.size(); ++ai)
    if (!old_arcs.count(static_cast<int>(ai))) push_arc(raw.arcs[ai]);
  for (const Arc& a : new_arcs) push_arc(a);
  return rebuild_edges(slim);
}

// ---------------------------------------------------------------------------
// State resolution

ResolvedState resolve_state(const Diagram& d, const std::vector<int>& state) {
  auto crossings = d.crossing_nodes();
  if (state.size() != crossings.size())
    throw std::invalid_argument("state map must assign every crossing");
  int total = 0;
  auto offset = port_offsets(d, total);
  Dsu dsu(total);
  for (const Arc& a : d.arcs)
    dsu.unite(port_id(d, offset, a.from.node, a.from.slot),
              port_id(d, offset, a.to.node, a.to.slot));
  ResolvedState rs;
  // Anchor nodes of the resolved graph: vertices and 0-state crossings.
  std::vector<int> anchor_of_node(d.nodes.size(), -1);
  int next_anchor = 0;
  for (size_t ni = 0; ni < d.nodes.size(); ++ni)
    if (d.nodes[ni].kind == NodeKind::Vertex) anchor_of_node[ni] = next_anchor++;
  for (size_t k = 0; k < crossings.size(); ++k) {
    int c = crossings[k];
    int p0 = port_id(d, offset, c, 0), p1 = port_id(d, offset, c, 1),
        p2 = port_id(d, offset, c, 2), p3 = port_id(d, offset, c, 3);
    switch (state[k]) {
      case 1:
        dsu.unite(p0, p1);
        dsu.unite(p2, p3);
        rs.m1++;
        break;
      case -1:
        dsu.unite(p1, p2);
        dsu.unite(p3, p0);
        rs.m2++;
        break;
      case 0:
        anchor_of_node[c] = next_anchor++;
        break;
      default:
        throw std::invalid_argument("state values must be +1, -1 or 0");
    }
  }
  // Each union class is a strand piece: either an open chain with exactly two
  // anchored ports, or a circle (no anchored port).
  std::map<int, std::vector<int>> anchors_of_class;  // dsu root -> anchor nodes
  std::set<int> roots;
  for (size_t ni = 0; ni < d.nodes.size(); ++ni) {
    for (int s = 0; s < d.nodes[ni].slots; ++s) {
      int p = port_id(d, offset, (int)ni, s);
      roots.insert(dsu.find(p));
      if (anchor_of_node[ni] >= 0) anchors_of_class[dsu.find(p)].push_back(anchor_of_node[ni]);
    }
  }
  MultiGraph g;
  g.vertices = next_anchor;
  for (int root : roots) {
    auto it = anchors_of_class.find(root);
    if (it == anchors_of_class.end()) {
      // Circle: enters the graph as a vertex with one loop.
      int v = g.vertices++;
      g.edges.emplace_back(v, v);
    } else {
      if (it->second.size() != 2) throw std::logic_error("strand piece with bad anchor count");
      g.edges.emplace_back(it->second[0], it->second[1]);
    }
  }
  for (long i = 0; i < d.free_loops; ++i) {
    int v = g.vertices++;
    g.edges.emplace_back(v, v);
  }
  rs.graph = g;
  rs.omega = g.omega();
  rs.beta = g.beta();
  return rs;
}

int MultiGraph::omega() const {
  Dsu dsu(vertices);
  for (auto& [a, b] : edges) dsu.unite(a, b);
  std::set<int> roots;
  for (int v = 0; v < vertices; ++v) roots.insert(dsu.find(v));
  return static_cast<int>(roots.size());
}

int MultiGraph::beta() const { return static_cast<int>(edges.size()) - vertices + omega(); }

int resolve_state_omega_traversal(const Diagram& d, const std::vector<int>& state) {
  auto crossings = d.crossing_nodes();
  if (state.size() != crossings.size())
    throw std::invalid_argument("state map must assign every crossing");
  std::map<int, int> state_of_node;
  for (size_t k = 0; k < crossings.size(); ++k) state_of_node[crossings[k]] = state[k];

  // Walk strands explicitly: from a port, smoothed crossings connect
  // slot pairs; arcs connect nodes.  Anchors are vertices and 0-crossings.
  auto is_anchor = [&](int node) {
    return d.nodes[node].kind == NodeKind::Vertex || state_of_node[node] == 0;
  };
  auto smooth_partner = [&](int node, int slot) -> int {
    int s = state_of_node[node];
    if (s == 1) return slot ^ 1;                  // joins (0,1) and (2,3)
    return slot == 3 ? 0 : (slot == 0 ? 3 : slot == 1 ? 2 : 1);  // joins (1,2),(3,0)
  };

  std::set<std::pair<int, int>> seen;
  struct Piece {
    std::vector<int> anchors;
  };
  std::vector<Piece> pieces;
  for (size_t ni = 0; ni < d.nodes.size(); ++ni) {
    for (int s0 = 0; s0 < d.nodes[ni].slots; ++s0) {
      if (seen.count({(int)ni, s0})) continue;
      // Trace the whole strand piece through arcs and smoothings.
      Piece piece;
      Endpoint at{(int)ni, s0};
      bool closed = true;
      // First rewind to an anchor if the piece is open.
      std::vector<Endpoint> stack{at};
      std::set<std::pair<int, int>> local;
      while (!stack.empty()) {
        Endpoint cur = stack.back();
        stack.pop_back();
        if (local.count({cur.node, cur.slot})) continue;
        local.insert({cur.node, cur.slot});
        if (is_anchor(cur.node)) {
          piece.anchors.push_back(cur.node);
          closed = false;
        } else {
          int partner = smooth_partner(cur.node, cur.slot);
          stack.push_back({cur.node, partner});
        }
        int ai = d.arc_at(cur.node, cur.slot);
        const Arc& a = d.arcs[ai];
        Endpoint other = (a.from == cur) ? a.to : a.from;
        if (!local.count({other.node, other.slot})) stack.push_back(other);
      }
      for (auto& pr : local) seen.insert(pr);
      (void)closed;
      pieces.push_back(piece);
    }
  }
  // Components: BFS over anchors linked by pieces; circles are their own
  // components; free loops too.
  std::map<int, std::vector<int>> adj;  // anchor node -> anchor node
  int circles = 0;
  for (auto& piece : pieces) {
    if (piece.anchors.empty()) {
      circles++;
    } else {
      for (size_t i = 0; i + 1 < piece.anchors.size(); ++i) {
        adj[piece.anchors[i]].push_back(piece.anchors[i + 1]);
        adj[piece.anchors[i + 1]].push_back(piece.anchors[i]);
      }
    }
  }
  std::set<int> anchors;
  for (size_t ni = 0; ni < d.nodes.size(); ++ni)
    if (d.nodes[ni].slots > 0 && is_anchor((int)ni)) anchors.insert((int)ni);
  std::set<int> visited;
  int comps = 0;
  for (int a : anchors) {
    if (visited.count(a)) continue;
    comps++;
    std::queue<int> q;
    q.push(a);
    visited.insert(a);
    while (!q.empty()) {
      int cur = q.front();
      q.pop();
      for (int nb : adj[cur])
        if (!visited.count(nb)) {
          visited.insert(nb);
          q.push(nb);
        }
    }
  }
  return comps + circles + static_cast<int>(d.free_loops);
}

// ---------------------------------------------------------------------------
// K4 tables

const std::vector<std::set<std::string>>& k4_cycles() {
  static const std::vector<std::set<std::string>> cycles = {
      {"a1", "a2", "a6"}, {"a1", "a3", "a5"}, {"a2", "a3", "a4"}, {"a4", "a5", "a6"},
      {"a1", "a2", "a4", "a5"}, {"a1", "a3", "a4", "a6"}, {"a2", "a3", "a5", "a6"}};
  return cycles;
}

const std::vector<std::set<std::string>>& k4_thetas() {
  static const std::vector<std::set<std::string>> thetas = [] {
    std::vector<std::set<std::string>> t;
    for (int i = 1; i <= 6; ++i) {
      std::set<std::string> all;
      for (int j = 1; j <= 6; ++j)
        if (j != i) all.insert("a" + std::to_string(j));
      t.push_back(all);
    }
    return t;
  }();
  return thetas;
}

// ---------------------------------------------------------------------------
// LinkDiagram

int LinkDiagram::components() const {
  std::vector<bool> seen(mate.size(), false);
  int comps = 0;
  for (size_t p0 = 0; p0 < mate.size(); ++p0) {
    if (seen[p0]) continue;
    comps++;
    size_t p = p0;
    // Follow: cross the passage, then the arc.
    while (!seen[p]) {
      seen[p] = true;
      size_t exit = (p & ~3ULL) + ((p + 2) & 3ULL);
      seen[exit] = true;
      p = static_cast<size_t>(mate[exit]);
    }
  }
  return comps + static_cast<int>(free_loops);
}

int LinkDiagram::sign(int c) const {
  if (!oriented) throw std::invalid_argument("crossing sign requires an orientation");
  return (over_flow13[c] != 0) != (under_flow02[c] != 0) ? 1 : -1;
}

long LinkDiagram::writhe() const {
  long w = 0;
  for (int c = 0; c < crossings; ++c) w += sign(c);
  return w;
}

void LinkDiagram::orient() {
  under_flow02.assign(crossings, 0);
  over_flow13.assign(crossings, 0);
  std::vector<bool> seen(mate.size(), false);
  for (size_t p0 = 0; p0 < mate.size(); ++p0) {
    if (seen[p0]) continue;
    size_t p = p0;
    while (!seen[p]) {
      seen[p] = true;
      int c = static_cast<int>(p / 4), s = static_cast<int>(p % 4);
      // Flow enters at p.
      if (s == 0) under_flow02[c] = 1;
      if (s == 1) over_flow13[c] = 1;
      size_t exit = (p & ~3ULL) + ((p + 2) & 3ULL);
      seen[exit] = true;
      p = static_cast<size_t>(mate[exit]);
    }
  }
  oriented = true;
}

LinkDiagram LinkDiagram::mirrored() const {
  LinkDiagram m(*this);
  // Slot s of the switched crossing was slot (s+1)%4 before.
  std::vector<int> newmate(mate.size());
  auto remap = [&](size_t p) { return (p & ~3ULL) + ((p + 3) & 3ULL); };
  for (size_t p = 0; p < mate.size(); ++p) newmate[remap(p)] = static_cast<int>(remap(mate[p]));
  m.mate = std::move(newmate);
  if (oriented) {
    for (int c = 0; c < crossings; ++c) {
      // Old under (0->2 flow) becomes over (3->1 after the shift), old over
      // becomes under.
      m.over_flow13[c] = under_flow02[c] ? 0 : 1;
      m.under_flow02[c] = over_flow13[c] ? 1 : 0;
    }
  }
  return m;
}

std::vector<std::string> LinkDiagram::check() const {
  std::vector<std::string> bad;
  if (static_cast<int>(mate.size()) != 4 * crossings) bad.push_back("bad mate size");
  for (size_t p = 0; p < mate.size(); ++p) {
    if (mate[p] < 0 || mate[p] >= static_cast<int>(mate.size()) ||
        mate[mate[p]] != static_cast<int>(p) || mate[p] == static_cast<int>(p)) {
      bad.push_back("mate is not a fixed-point-free involution at port " + std::to_string(p));
      break;
    }
  }
  if (oriented && (under_flow02.size() != static_cast<size_t>(crossings) ||
                   over_flow13.size() != static_cast<size_t>(crossings)))
    bad.push_back("orientation arrays missing");
  return bad;
}

LinkDiagram to_link(const Diagram& d) {
  if (d.vertex_count() != 0)
    throw std::invalid_argument("to_link: diagram still has graph vertices");
  LinkDiagram l;
  auto crossings = d.crossing_nodes();
  l.crossings = static_cast<int>(crossings.size());
  l.free_loops = d.free_loops;
  std::vector<int> index_of(d.nodes.size(), -1);
  for (size_t k = 0; k < crossings.size(); ++k) index_of[crossings[k]] = static_cast<int>(k);
  l.mate.assign(4 * l.crossings, -1);
  l.under_flow02.assign(l.crossings, 0);
  l.over_flow13.assign(l.crossings, 0);
  std::vector<int> under_in(l.crossings, 0), over_in(l.crossings, 0);
  for (const Arc& a : d.arcs) {
    int p = 4 * index_of[a.from.node] + a.from.slot;
    int q = 4 * index_of[a.to.node] + a.to.slot;
    l.mate[p] = q;
    l.mate[q] = p;
    // Flow enters the crossing at the arc's head.
    int c = index_of[a.to.node];
    if (a.to.slot % 2 == 0) {
      under_in[c]++;
      if (a.to.slot == 0) l.under_flow02[c] = 1;
    } else {
      over_in[c]++;
      if (a.to.slot == 1) l.over_flow13[c] = 1;
    }
  }
  // Arc directions define an orientation only if every passage has exactly
  // one inflow.
  bool flows_ok = l.crossings > 0;
  for (int c = 0; c < l.crossings; ++c)
    if (under_in[c] != 1 || over_in[c] != 1) flows_ok = false;
  l.oriented = flows_ok;
  if (!flows_ok) {
    l.under_flow02.assign(l.crossings, 0);
    l.over_flow13.assign(l.crossings, 0);
  }
  return l;
}

Diagram link_to_diagram(const LinkDiagram& l) {
  Diagram d;
  d.free_loops = l.free_loops;
  for (int c = 0; c < l.crossings; ++c)
    d.nodes.push_back({NodeKind::Crossing, "x" + std::to_string(c + 1), 4});
  auto exits_here = [&](int p) {
    if (!l.oriented) return p % 4 == 2 || p % 4 == 3;
    int c = p / 4, s = p % 4;
    if (s % 2 == 0) return l.under_flow02[c] ? s == 2 : s == 0;
    return l.over_flow13[c] ? s == 3 : s == 1;
  };
  for (size_t p = 0; p < l.mate.size(); ++p) {
    int q = l.mate[p];
    if (static_cast<int>(p) > q) continue;
    Endpoint a{static_cast<int>(p) / 4, static_cast<int>(p) % 4};
    Endpoint b{q / 4, q % 4};
    if (exits_here(static_cast<int>(p)))
      d.arcs.push_back({a, b});
    else
      d.arcs.push_back({b, a});
  }
  return d;
}

// ---------------------------------------------------------------------------
// JSON

using nlohmann::json;

std::string diagram_to_json(const Diagram& d, int indent) {
  json j;
  j["nodes"] = json::array();
  for (const Node& n : d.nodes) {
    j["nodes"].push_back({{"id", n.name},
                          {"kind", n.kind == NodeKind::Vertex ? "vertex" : "crossing"},
                          {"slots", n.slots}});
  }
  j["arcs"] = json::array();
  for (const Arc& a : d.arcs) {
    j["arcs"].push_back(json::array({json::array({d.nodes[a.from.node].name, a.from.slot}),
                                     json::array({d.nodes[a.to.node].name, a.to.slot})}));
  }
  j["edges"] = json::object();
  for (const Edge& e : d.edges) {
    j["edges"][e.name] = {
        {"tail", d.nodes[e.tail].name}, {"head", d.nodes[e.head].name}, {"arcs", e.arcs}};
  }
  j["free_loops"] = d.free_loops;
  return indent >= 0 ? j.dump(indent) : j.dump();
}

Diagram diagram_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("diagram parse error: ") + err.what());
  }
  Diagram d;
  try {
    for (const auto& n : j.at("nodes")) {
      Node node;
      node.name = n.at("id").get<std::string>();
      std::string kind = n.at("kind").get<std::string>();
      if (kind == "vertex")
        node.kind = NodeKind::Vertex;
      else if (kind == "crossing")
        node.kind = NodeKind::Crossing;
      else
        throw std::invalid_argument("node '" + node.name + "': unknown kind '" + kind + "'");
      node.slots = n.at("slots").get<int>();
      d.nodes.push_back(node);
    }
    auto endpoint = [&](const json& e) {
      Endpoint p;
      p.node = d.node_index(e.at(0).get<std::string>());
      if (p.node < 0)
        throw std::invalid_argument("arc endpoint references unknown node '" +
                                    e.at(0).get<std::string>() + "'");
      p.slot = e.at(1).get<int>();
      return p;
    };
    for (const auto& a : j.at("arcs")) d.arcs.push_back({endpoint(a.at(0)), endpoint(a.at(1))});
    if (j.contains("edges")) {
      for (auto it = j.at("edges").begin(); it != j.at("edges").end(); ++it) {
        Edge e;
        e.name = it.key();
        e.tail = d.node_index(it.value().at("tail").get<std::string>());
        e.head = d.node_index(it.value().at("head").get<std::string>());
        if (e.tail < 0 || e.head < 0)
          throw std::invalid_argument("edge '" + e.name + "' references unknown vertex");
        for (const auto& ai : it.value().at("arcs")) e.arcs.push_back(ai.get<int>());
        d.edges.push_back(e);
      }
    }
    d.free_loops = j.value("free_loops", 0L);
  } catch (const json::exception& err) {
    throw std::invalid_argument(std::string("diagram schema error: ") + err.what());
  }
  return d;
}

}  // namespace sgpoly
