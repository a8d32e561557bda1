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

#include "sgpoly/invariants.hpp"

#include <cstdlib>
#include <future>
#include <map>
#include <thread>

namespace sgpoly {

int StateSumConfig::resolved_workers() const {
  if (workers > 0) return workers;
  if (const char* env = std::getenv("SGPOLY_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  unsigned hc = std::thread::hardware_concurrency();
  if (hc == 0) return 1;
  return static_cast<int>(hc > 8 ? 8 : hc);
}

namespace {

LaurentPolynomial loop_power(int m) {
  // d^m with d = -A^2 - A^-2.
  return LaurentPolynomial::loop_value().pow(static_cast<unsigned>(m));
}

int count_roots(std::vector<int>& parent) {
  int roots = 0;
  for (size_t i = 0; i < parent.size(); ++i) {
    size_t x = i;
    while (parent[x] != static_cast<int>(x)) x = parent[x];
    parent[i] = static_cast<int>(x);
    roots += (x == i);
  }
  return roots;
}

void unite(std::vector<int>& parent, int a, int b) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a = parent[a];
  }
  while (parent[b] != b) {
    parent[b] = parent[parent[b]];
    b = parent[b];
  }
  if (a != b) parent[a] = b;
}

}  // namespace

namespace {

// Contracts crossings one at a time against a frontier.  A state is a
// perfect matching on the open wire ends (ports of unprocessed crossings
// whose arcs lead into the processed region), with a polynomial weight;
// smoothing a crossing splices the matching and closes loops.  The result
// is exactly the state sum, without enumerating all 2^n states.
LaurentPolynomial bracket_sweep(const LinkDiagram& link) {
  const int n = link.crossings;
  // Greedy order: prefer the crossing with the most arcs into the region.
  std::vector<int> order;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_score = -1;
    for (int c = 0; c < n; ++c) {
      if (done[c]) continue;
      int score = 0;
      for (int s = 0; s < 4; ++s) {
        int m = link.mate[4 * c + s];
        if (done[m / 4] || m / 4 == c) ++score;
      }
      if (score > best_score) {
        best = c;
        best_score = score;
      }
    }
    order.push_back(best);
    done[best] = true;
  }

  // Matchings keyed by sorted pair list.
  using Key = std::vector<int>;
  std::map<Key, LaurentPolynomial> states;
  states[{}] = LaurentPolynomial::one();
  std::vector<bool> processed(n, false);
  for (int c : order) {
    processed[c] = true;
    std::map<Key, LaurentPolynomial> next;
    for (const auto& [key, weight] : states) {
      std::map<int, int> match;
      for (size_t i = 0; i < key.size(); i += 2) {
        match[key[i]] = key[i + 1];
        match[key[i + 1]] = key[i];
      }
      // Extend the matching with this crossing's wires.
      for (int s = 0; s < 4; ++s) {
        int p = 4 * c + s;
        if (match.count(p)) continue;  // wire already open toward p
        int m = link.mate[p];
        match[p] = m;
        match[m] = p;
      }
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        auto local = match;
        int loops = 0;
        auto splice_local = [&](int u, int v) {
          int a = local.at(u), b = local.at(v);
          local.erase(u);
          local.erase(v);
          if (a == v) {
            ++loops;
            return;
          }
          local[a] = b;
          local[b] = a;
        };
        const int p = 4 * c;
        if (smoothing == 0) {
          splice_local(p + 0, p + 1);
          splice_local(p + 2, p + 3);
        } else {
          splice_local(p + 1, p + 2);
          splice_local(p + 3, p + 0);
        }
        Key nk;
        nk.reserve(local.size());
        for (const auto& [a, b] : local)
          if (a < b) {
            nk.push_back(a);
            nk.push_back(b);
          }
        LaurentPolynomial w = weight * loop_power(loops);
        w.scale(BigInt(1), smoothing == 0 ? 1 : -1);
        auto [it, inserted] = next.try_emplace(std::move(nk), w);
        if (!inserted) it->second += w;
      }
    }
    states = std::move(next);
  }
  LaurentPolynomial total;
  for (const auto& [key, weight] : states) {
    if (!key.empty()) throw std::logic_error("bracket sweep left open strands");
    total += weight;
  }
  // total carries d^{loops}; the bracket normalizes one loop away.
  auto q = total.divide_exact(LaurentPolynomial::loop_value());
  if (!q) throw std::logic_error("bracket sweep: loop normalization failed");
  LaurentPolynomial out = *q;
  if (link.free_loops > 0) out *= loop_power(static_cast<int>(link.free_loops));
  return out;
}

}  // namespace

LaurentPolynomial kauffman_bracket(const LinkDiagram& link, const StateSumConfig& cfg) {
  auto bad = link.check();
  if (!bad.empty()) throw std::invalid_argument("bracket: " + bad.front());
  const int n = link.crossings;
  if (n > cfg.bracket_crossing_cap)
    throw CapExceededError("bracket: crossing cap exceeded (" + std::to_string(n) + " > " +
                           std::to_string(cfg.bracket_crossing_cap) + ")");
  if (n == 0)
    return link.free_loops == 0 ? LaurentPolynomial::one()
                                : loop_power(static_cast<int>(link.free_loops) - 1);
  if (n > cfg.bracket_sweep_threshold) return bracket_sweep(link);

  // Template union-find with the arcs already joined; each state adds the
  // two smoothing joins per crossing and counts circles.
  std::vector<int> base(4 * n);
  for (int i = 0; i < 4 * n; ++i) base[i] = i;
  for (int p = 0; p < 4 * n; ++p)
    if (link.mate[p] > p) unite(base, p, link.mate[p]);

  const int max_circles = 2 * n + 1;
  const std::uint64_t total = 1ULL << n;
  const int workers =
      static_cast<int>(std::min<std::uint64_t>(cfg.resolved_workers(), (total + 1023) / 1024));

  auto run = [&](std::uint64_t from, std::uint64_t to) {
    // tally[b * (max_circles + 1) + circles] over states with b B-smoothings
    std::vector<std::int64_t> tally(static_cast<size_t>(n + 1) * (max_circles + 1), 0);
    std::vector<int> parent(4 * n);
    for (std::uint64_t s = from; s < to; ++s) {
      parent = base;
      int b = 0;
      for (int c = 0; c < n; ++c) {
        const int p = 4 * c;
        if ((s >> c) & 1ULL) {
          unite(parent, p + 1, p + 2);
          unite(parent, p + 3, p + 0);
          ++b;
        } else {
          unite(parent, p + 0, p + 1);
          unite(parent, p + 2, p + 3);
        }
      }
      const int circles = count_roots(parent);
      tally[static_cast<size_t>(b) * (max_circles + 1) + circles]++;
    }
    return tally;
  };

  std::vector<std::int64_t> tally;
  if (workers <= 1) {
    tally = run(0, total);
  } else {
    std::vector<std::future<std::vector<std::int64_t>>> futs;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      std::uint64_t from = w * chunk;
      std::uint64_t to = std::min(total, from + chunk);
      if (from >= to) break;
      futs.push_back(std::async(std::launch::async, run, from, to));
    }
    for (auto& f : futs) {
      auto part = f.get();
      if (tally.empty())
        tally = std::move(part);
      else
        for (size_t i = 0; i < tally.size(); ++i) tally[i] += part[i];
    }
  }

  std::vector<LaurentPolynomial> dpow(max_circles + static_cast<int>(link.free_loops) + 1);
  dpow[0] = LaurentPolynomial::one();
  for (size_t m = 1; m < dpow.size(); ++m) dpow[m] = dpow[m - 1] * LaurentPolynomial::loop_value();

  LaurentPolynomial out;
  for (int b = 0; b <= n; ++b)
    for (int m = 1; m <= max_circles; ++m) {
      std::int64_t cnt = tally[static_cast<size_t>(b) * (max_circles + 1) + m];
      if (cnt == 0) continue;
      LaurentPolynomial term = dpow[m + link.free_loops - 1];
      term.scale(BigInt(cnt), n - 2 * b);
      out += term;
    }
  return out;
}

LaurentPolynomial kauffman_bracket(const Diagram& d, const StateSumConfig& cfg) {
  return kauffman_bracket(to_link(d), cfg);
}

// ---------------------------------------------------------------------------
// Skein-recursive bracket

namespace {

struct SkeinState {
  std::vector<int> mate;
  std::vector<std::uint8_t> alive;
  int alive_count = 0;
};

// Joins the strands at two ports of a crossing being removed; returns the
// number of circles closed by the splice.
int splice(std::vector<int>& mate, int u, int v) {
  const int a = mate[u];
  const int b = mate[v];
  if (a == v) return 1;  // the ports were joined by an arc already
  mate[a] = b;
  mate[b] = a;
  return 0;
}

std::string skein_key(const SkeinState& st) {
  std::string key;
  key.reserve(st.mate.size() * 3);
  for (size_t c = 0; c < st.alive.size(); ++c) key += st.alive[c] ? '1' : '0';
  for (size_t p = 0; p < st.mate.size(); ++p) {
    if (!st.alive[p / 4]) continue;
    key += ',';
    key += std::to_string(st.mate[p]);
  }
  return key;
}

// Bracket with circle weight d^{circles closed from here on}; the caller
// supplies the d^{loops-1} normalization.
LaurentPolynomial skein_eval(SkeinState st, std::map<std::string, LaurentPolynomial>* memo) {
  if (st.alive_count == 0) return LaurentPolynomial::one();
  std::string key;
  if (memo) {
    key = skein_key(st);
    auto it = memo->find(key);
    if (it != memo->end()) return it->second;
  }
  int c = 0;
  while (!st.alive[c]) ++c;
  const int p = 4 * c;
  st.alive[c] = 0;
  st.alive_count--;

  SkeinState pos = st;
  int closed = splice(pos.mate, p + 0, p + 1) + splice(pos.mate, p + 2, p + 3);
  LaurentPolynomial result = skein_eval(std::move(pos), memo) * loop_power(closed);
  result.scale(BigInt(1), 1);  // coefficient A

  SkeinState neg = std::move(st);
  closed = splice(neg.mate, p + 1, p + 2) + splice(neg.mate, p + 3, p + 0);
  LaurentPolynomial other = skein_eval(std::move(neg), memo) * loop_power(closed);
  other.scale(BigInt(1), -1);  // coefficient A^-1
  result += other;

  if (memo) (*memo)[key] = result;
  return result;
}

}  // namespace

LaurentPolynomial kauffman_bracket_skein(const LinkDiagram& link, const StateSumConfig& cfg) {
  auto bad = link.check();
  if (!bad.empty()) throw std::invalid_argument("bracket: " + bad.front());
  if (link.crossings > cfg.bracket_crossing_cap)
    throw CapExceededError("bracket: crossing cap exceeded");
  if (link.crossings == 0)
    return link.free_loops == 0 ? LaurentPolynomial::one()
                                : loop_power(static_cast<int>(link.free_loops) - 1);
  SkeinState st;
  st.mate = link.mate;
  st.alive.assign(link.crossings, 1);
  st.alive_count = link.crossings;
  std::map<std::string, LaurentPolynomial> memo;
  LaurentPolynomial r = skein_eval(std::move(st), cfg.skein_memo ? &memo : nullptr);
  if (link.free_loops > 0) return r * loop_power(static_cast<int>(link.free_loops) - 1);
  // Every complete smoothing closes at least one circle, so d divides r.
  auto q = r.divide_exact(LaurentPolynomial::loop_value());
  if (!q) throw std::logic_error("skein bracket: loop normalization failed");
  return *q;
}

LaurentPolynomial jones(const LinkDiagram& link, const StateSumConfig& cfg) {
  if (!link.oriented && link.crossings > 0)
    throw std::invalid_argument("jones: link diagram carries no orientation");
  LaurentPolynomial v = kauffman_bracket(link, cfg);
  const long w = link.crossings > 0 ? link.writhe() : 0;
  v.scale((w % 2 == 0) ? BigInt(1) : BigInt(-1), static_cast<int>(-3 * w));
  return v;
}

// ---------------------------------------------------------------------------
// Spatial-graph state sum

LaurentPolynomial graph_weight(const MultiGraph& g) {
  const int ne = static_cast<int>(g.edges.size());
  if (ne > 62) throw std::invalid_argument("graph_weight: too many edges");
  // Coefficients of y^beta, signed by (-1)^omega.
  std::vector<BigInt> coeff(ne + 2, BigInt(0));
  std::vector<int> parent(g.vertices);
  const std::uint64_t total = 1ULL << ne;
  for (std::uint64_t keep = 0; keep < total; ++keep) {
    // keep bit set: edge stays in G - F (i.e. not in F).
    for (int v = 0; v < g.vertices; ++v) parent[v] = v;
    int kept = 0;
    for (int e = 0; e < ne; ++e) {
      if ((keep >> e) & 1ULL) {
        unite(parent, g.edges[e].first, g.edges[e].second);
        ++kept;
      }
    }
    int omega = count_roots(parent);
    int beta = kept - g.vertices + omega;
    if (omega % 2 == 0)
      coeff[beta] += 1;
    else
      coeff[beta] -= 1;
  }
  // Substitute y = -A - 2 - A^-1.
  LaurentPolynomial y;
  y.add_term(1, -1);
  y.add_term(0, -2);
  y.add_term(-1, -1);
  LaurentPolynomial out, ypow = LaurentPolynomial::one();
  for (size_t b = 0; b < coeff.size(); ++b) {
    if (coeff[b] != 0) out += coeff[b] * ypow;
    ypow *= y;
  }
  return out;
}

LaurentPolynomial yamada(const Diagram& d, const StateSumConfig& cfg) {
  auto bad = validate(d);
  if (!bad.empty()) throw std::invalid_argument("yamada: invalid diagram: " + bad.front());
  const auto crossings = d.crossing_nodes();
  const int n = static_cast<int>(crossings.size());
  if (n > cfg.yamada_crossing_cap)
    throw CapExceededError("yamada: crossing cap exceeded (" + std::to_string(n) + " > " +
                           std::to_string(cfg.yamada_crossing_cap) + ")");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;

  auto run = [&](std::uint64_t from, std::uint64_t to) {
    LaurentPolynomial acc;
    std::vector<int> state(n);
    for (std::uint64_t s = from; s < to; ++s) {
      std::uint64_t v = s;
      for (int i = 0; i < n; ++i) {
        int trit = static_cast<int>(v % 3);
        v /= 3;
        state[i] = trit == 2 ? 0 : (trit == 0 ? 1 : -1);
      }
      ResolvedState rs = resolve_state(d, state);
      LaurentPolynomial w = graph_weight(rs.graph);
      w.scale(BigInt(1), rs.m1 - rs.m2);
      acc += w;
    }
    return acc;
  };

  const int workers =
      static_cast<int>(std::min<std::uint64_t>(cfg.resolved_workers(), (total + 26) / 27));
  if (workers <= 1 || total < 81) return run(0, total);
  std::vector<std::future<LaurentPolynomial>> futs;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t from = w * chunk;
    std::uint64_t to = std::min(total, from + chunk);
    if (from >= to) break;
    futs.push_back(std::async(std::launch::async, run, from, to));
  }
  LaurentPolynomial acc;
  for (auto& f : futs) acc += f.get();
  return acc;
}

PhiFraction jaeger(const Diagram& d, const StateSumConfig& cfg) {
  auto bad = validate(d);
  if (!bad.empty()) throw std::invalid_argument("jaeger: invalid diagram: " + bad.front());
  BarDiagram bars = bar_diagram(d);
  const int nbars = bars.bar_count();
  if (nbars > 20) throw std::invalid_argument("jaeger: too many bars");
  const LaurentPolynomial phi = LaurentPolynomial::phi();
  LaurentPolynomial num;
  for (unsigned long mask = 0; mask < (1UL << nbars); ++mask) {
    LaurentPolynomial leaf = kauffman_bracket(bars.resolve(mask), cfg);
    int turnbacks = __builtin_popcountl(mask);
    num += leaf * phi.pow(static_cast<unsigned>(nbars - turnbacks));
  }
  return PhiFraction(std::move(num), static_cast<unsigned>(nbars));
}

PhiFraction jaeger_via_yamada(const Diagram& d, const StateSumConfig& cfg) {
  if (d.vertex_count() == 0 || d.edges.empty())
    throw std::invalid_argument("jaeger_via_yamada: needs a connected graph diagram");
  const int exponent =
      static_cast<int>(d.edges.size()) - d.vertex_count() + 1;
  if (exponent < 0) throw std::invalid_argument("jaeger_via_yamada: disconnected graph");
  LaurentPolynomial y4 = yamada(d, cfg).substitute_power(4);
  return PhiFraction(-y4, static_cast<unsigned>(exponent));
}

}  // namespace sgpoly
