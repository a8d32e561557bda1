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

#include "sgpoly/surfaces.hpp"

#include <algorithm>

namespace sgpoly {

namespace {

// Cyclic edge-name order around a vertex, by slot index.
std::vector<std::string> vertex_edge_cycle(const Diagram& d, int v) {
  std::vector<std::string> cyc(d.nodes[v].slots);
  for (const Edge& e : d.edges) {
    const Arc& first = d.arcs[e.arcs.front()];
    const Arc& last = d.arcs[e.arcs.back()];
    if (first.from.node == v) cyc[first.from.slot] = e.name;
    if (last.to.node == v) cyc[last.to.slot] = e.name;
  }
  return cyc;
}

bool cyclic_equal(const std::array<std::string, 3>& want, const std::vector<std::string>& have) {
  for (int r = 0; r < 3; ++r)
    if (want[0] == have[r % 3] && want[1] == have[(r + 1) % 3] && want[2] == have[(r + 2) % 3])
      return true;
  return false;
}

}  // namespace

std::optional<ThetaLabeling> theta_labeling(const Diagram& d) {
  if (classify(d) != GraphKind::Theta) return std::nullopt;
  std::vector<int> verts;
  for (size_t i = 0; i < d.nodes.size(); ++i)
    if (d.nodes[i].kind == NodeKind::Vertex) verts.push_back(static_cast<int>(i));
  for (int swap = 0; swap < 2; ++swap) {
    const int v1 = verts[swap], v2 = verts[1 - swap];
    auto at1 = vertex_edge_cycle(d, v1);
    auto at2 = vertex_edge_cycle(d, v2);
    // ccw at v1 must read (e3, e2, e1): try the three rotations.
    for (int r = 0; r < 3; ++r) {
      ThetaLabeling lab;
      lab.v1 = v1;
      lab.v2 = v2;
      lab.edge = {at1[(r + 2) % 3], at1[(r + 1) % 3], at1[r % 3]};  // e1, e2, e3
      if (!cyclic_equal({lab.edge[0], lab.edge[1], lab.edge[2]}, at2)) continue;
      for (int i = 0; i < 3; ++i) {
        const Edge* e = d.find_edge(lab.edge[i]);
        lab.flip[i] = e->tail != v1;
      }
      return lab;
    }
  }
  // Vertex rotations that cannot realize the reference cyclic orders (the
  // disks sit flipped relative to each other).  The twist formulas are
  // invariant under relabelling and under swapping the two vertices, so any
  // deterministic labelling serves; edges sorted by name.
  ThetaLabeling lab;
  lab.v1 = verts[0];
  lab.v2 = verts[1];
  std::array<std::string, 3> names;
  int k = 0;
  for (const Edge& e : d.edges) names[k++] = e.name;
  std::sort(names.begin(), names.end());
  lab.edge = names;
  for (int i = 0; i < 3; ++i) lab.flip[i] = d.find_edge(lab.edge[i])->tail != lab.v1;
  return lab;
}

namespace {

// Per-crossing edge ownership and traversal sign against a labelling.
struct LabelledCrossings {
  std::vector<std::string> names;          // canonical edge order
  std::vector<int> dir;                    // +1 if stored orientation is canonical
  std::map<std::string, int> index;

  int idx(const std::string& name) const { return index.at(name); }
};

LabelledCrossings k4_labels() {
  LabelledCrossings lc;
  for (int i = 1; i <= 6; ++i) {
    lc.names.push_back("a" + std::to_string(i));
    lc.index[lc.names.back()] = i - 1;
    lc.dir.push_back(1);
  }
  return lc;
}

LabelledCrossings theta_labels(const Diagram& d) {
  auto lab = theta_labeling(d);
  if (!lab) throw KindMismatchError("diagram is not a theta diagram with a valid labelling");
  LabelledCrossings lc;
  for (int i = 0; i < 3; ++i) {
    lc.names.push_back(lab->edge[i]);
    lc.index[lab->edge[i]] = i;
    lc.dir.push_back(lab->flip[i] ? -1 : 1);
  }
  return lc;
}

LabelledCrossings knot_labels(const Diagram& d) {
  LabelledCrossings lc;
  if (d.edges.size() == 1) {
    lc.names.push_back(d.edges[0].name);
    lc.index[d.edges[0].name] = 0;
    lc.dir.push_back(1);
  } else {
    // Several 2-valent vertices: all edges belong to one strand.
    for (const Edge& e : d.edges) {
      lc.names.push_back(e.name);
      lc.index[e.name] = 0;
      lc.dir.push_back(1);
    }
  }
  return lc;
}

std::vector<std::vector<int>> signed_sums(const Diagram& d, const LabelledCrossings& lc,
                                          int size) {
  std::vector<int> owner(d.arcs.size(), -1);
  std::vector<int> owner_dir(d.arcs.size(), 1);
  for (const Edge& e : d.edges) {
    auto it = lc.index.find(e.name);
    if (it == lc.index.end()) throw std::logic_error("unlabelled edge '" + e.name + "'");
    for (int ai : e.arcs) {
      owner[ai] = it->second;
      owner_dir[ai] = lc.dir[lc.index.at(e.name)];
    }
  }
  std::vector<std::vector<int>> w(size, std::vector<int>(size, 0));
  for (int c : d.crossing_nodes()) {
    int under_arc = d.arc_at(c, 0);
    int over_arc = d.arc_at(c, 1);
    int i = owner[under_arc], j = owner[over_arc];
    if (i < 0 || j < 0) throw std::invalid_argument("crossing on an unlabelled strand");
    int s = crossing_sign(d, c) * owner_dir[under_arc] * owner_dir[over_arc];
    if (i == j) {
      w[i][i] += s;
    } else {
      w[i][j] += s;
      w[j][i] += s;
    }
  }
  return w;
}

}  // namespace

int TwistData::param_sum() const {
  int s = 0;
  for (int p : params) s += p;
  return s;
}

TwistData crossing_matrix(const Diagram& d) {
  TwistData td;
  td.kind = classify(d);
  LabelledCrossings lc;
  switch (td.kind) {
    case GraphKind::K4: lc = k4_labels(); break;
    case GraphKind::Theta: lc = theta_labels(d); break;
    case GraphKind::Knot: lc = knot_labels(d); break;
    default:
      throw KindMismatchError("crossing matrix needs a K4, theta or knot diagram, got " +
                              to_string(td.kind));
  }
  const int size = td.kind == GraphKind::K4 ? 6 : (td.kind == GraphKind::Theta ? 3 : 1);
  td.edge_names.assign(lc.names.begin(), lc.names.end());
  td.w = signed_sums(d, lc, size);
  return td;
}

TwistData twist_parameters(const Diagram& d) {
  TwistData td = crossing_matrix(d);
  const auto& w = td.w;
  auto W = [&](int i, int j) { return w[i - 1][j - 1]; };
  switch (td.kind) {
    case GraphKind::K4:
      td.params = {
          -2 * W(1, 1) - W(2, 3) - W(2, 5) + W(2, 1) + W(1, 3) + W(1, 5) + W(3, 6) - W(1, 6) +
              W(5, 6),
          -2 * W(2, 2) - W(2, 4) + W(1, 4) + W(4, 6) + W(2, 3) - W(1, 3) - W(3, 6) + W(1, 2) +
              W(2, 6),
          -2 * W(3, 3) + W(3, 4) - W(1, 4) + W(4, 5) + W(2, 3) + W(2, 5) - W(1, 2) + W(1, 3) -
              W(3, 5),
          -2 * W(4, 4) - W(2, 4) + W(3, 4) - W(4, 6) + W(3, 6) - W(2, 6) - W(4, 5) - W(2, 5) +
              W(3, 5),
          -2 * W(5, 5) - W(3, 5) + W(1, 5) - W(3, 6) + W(1, 6) - W(5, 6) - W(3, 4) + W(1, 4) -
              W(4, 5),
          -2 * W(6, 6) - W(1, 6) + W(2, 6) + W(2, 5) - W(1, 5) - W(5, 6) + W(2, 4) - W(1, 4) -
              W(4, 6),
      };
      break;
    case GraphKind::Theta:
      td.params = {
          -2 * W(1, 1) + W(1, 2) + W(1, 3) - W(2, 3),
          -2 * W(2, 2) + W(1, 2) + W(2, 3) - W(1, 3),
          -2 * W(3, 3) + W(1, 3) + W(2, 3) - W(1, 2),
      };
      break;
    case GraphKind::Knot:
      td.params = {-2 * w[0][0]};
      break;
    default:
      throw KindMismatchError("twist parameters need a K4, theta or knot diagram");
  }
  return td;
}

AssociatedLink associated_link(const Diagram& d, const StateSumConfig& cfg) {
  (void)cfg;
  AssociatedLink al;
  al.data = twist_parameters(d);
  BandedLink banded = double_banded(d);
  if (al.data.kind == GraphKind::Knot && d.edges.size() != 1)
    throw KindMismatchError("associated link of a knot expects a single-edge diagram");
  for (size_t i = 0; i < al.data.edge_names.size(); ++i) {
    const std::string& name = al.data.edge_names[i];
    insert_half_twists(banded, name, al.data.params[i]);
    al.twists[name] = al.data.params[i];
  }
  al.link = banded.to_link();
  const long expect = -static_cast<long>(al.data.param_sum());
  if (al.link.crossings > 0 && al.link.writhe() != expect)
    throw std::logic_error("associated link writhe " + std::to_string(al.link.writhe()) +
                           " differs from -sum of twists " + std::to_string(expect));
  return al;
}

LaurentPolynomial twist_coefficient(int n) {
  // A^{n-2} - (-1)^n A^{-3n-2}, divided exactly by 1 + A^-4.
  LaurentPolynomial num;
  num.add_term(n - 2, 1);
  num.add_term(-3 * n - 2, (n % 2 == 0) ? -1 : 1);
  LaurentPolynomial div;
  div.add_term(0, 1);
  div.add_term(-4, 1);
  auto q = num.divide_exact(div);
  if (!q) throw std::logic_error("twist coefficient is not a Laurent polynomial");
  return *q;
}

namespace {

int normalization_exponent(const Diagram& d, GraphKind kind) {
  // Twist-parameter sum; knots use -2 * writhe, which is the same rule for
  // the one-band surface.
  if (kind == GraphKind::Knot) return -2 * writhe(d);
  return twist_parameters(d).param_sum();
}

}  // namespace

PhiFraction normalized_jaeger(const Diagram& d, const StateSumConfig& cfg) {
  GraphKind kind = classify(d);
  if (kind != GraphKind::K4 && kind != GraphKind::Theta && kind != GraphKind::Knot)
    throw KindMismatchError("normalized Jaeger polynomial needs a K4, theta or knot diagram");
  const int t = normalization_exponent(d, kind);
  PhiFraction j = jaeger(d, cfg);
  // (-A^4)^t
  return j.scaled((t % 2 == 0) ? BigInt(1) : BigInt(-1), 4 * t);
}

LaurentPolynomial normalized_yamada(const Diagram& d, const StateSumConfig& cfg) {
  GraphKind kind = classify(d);
  if (kind != GraphKind::K4 && kind != GraphKind::Theta && kind != GraphKind::Knot)
    throw KindMismatchError("normalized Yamada polynomial needs a K4, theta or knot diagram");
  const int t = normalization_exponent(d, kind);
  LaurentPolynomial y = yamada(d, cfg);
  // (-A)^t
  y.scale((t % 2 == 0) ? BigInt(1) : BigInt(-1), t);
  return y;
}

int cycle_writhe(const Diagram& d, const std::set<std::string>& cycle) {
  // Coherence signs from walking the cycle in the abstract graph.
  std::map<std::string, int> sigma;
  const Edge* start = nullptr;
  for (const Edge& e : d.edges)
    if (cycle.count(e.name)) {
      start = &e;
      break;
    }
  if (!start) throw std::invalid_argument("cycle has no edges in the diagram");
  sigma[start->name] = 1;
  int at = start->head;
  const int home = start->tail;
  std::set<std::string> used{start->name};
  while (at != home) {
    const Edge* next = nullptr;
    for (const Edge& e : d.edges) {
      if (!cycle.count(e.name) || used.count(e.name)) continue;
      if (e.tail == at || e.head == at) {
        next = &e;
        break;
      }
    }
    if (!next) throw std::invalid_argument("edge set is not a cycle");
    sigma[next->name] = next->tail == at ? 1 : -1;
    at = next->tail == at ? next->head : next->tail;
    used.insert(next->name);
  }
  if (used.size() != cycle.size()) throw std::invalid_argument("edge set is not a single cycle");

  std::map<int, std::string> owner;  // arc -> edge name
  for (const Edge& e : d.edges)
    for (int ai : e.arcs) owner[ai] = e.name;
  int w = 0;
  for (int c : d.crossing_nodes()) {
    const std::string& under = owner.at(d.arc_at(c, 0));
    const std::string& over = owner.at(d.arc_at(c, 1));
    if (!cycle.count(under) || !cycle.count(over)) continue;
    w += crossing_sign(d, c) * sigma.at(under) * sigma.at(over);
  }
  return w;
}

std::vector<std::string> twist_writhe_violations(const Diagram& d) {
  if (classify(d) != GraphKind::K4)
    throw KindMismatchError("twist-writhe relations are defined for K4 diagrams");
  TwistData td = twist_parameters(d);
  std::vector<std::string> bad;
  for (const auto& cycle : k4_cycles()) {
    int nsum = 0;
    for (const auto& name : cycle) nsum += td.params[td.w.size() == 6 ? (name[1] - '1') : 0];
    int w2 = 2 * cycle_writhe(d, cycle);
    if (w2 != -nsum) {
      std::string names;
      for (const auto& name : cycle) names += name + " ";
      bad.push_back("cycle " + names + ": 2w = " + std::to_string(w2) +
                    " but -sum n = " + std::to_string(-nsum));
    }
  }
  return bad;
}

}  // namespace sgpoly
