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

#ifndef SGPOLY_INVARIANTS_HPP
#define SGPOLY_INVARIANTS_HPP

#include "sgpoly/banded.hpp"
#include "sgpoly/diagram.hpp"
#include "sgpoly/laurent.hpp"
#include "sgpoly/phi_fraction.hpp"

namespace sgpoly {

/// Thrown when a diagram exceeds the configured crossing caps.
struct CapExceededError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Evaluation knobs.  Results are bit-identical for every configuration:
/// workers only partition exact integer sums, and the skein memo only caches
/// identical subdiagram codes.
struct StateSumConfig {
  int workers = 0;          // 0: from SGPOLY_WORKERS or hardware
  bool skein_memo = false;  // cache for the skein-recursive oracle
  int bracket_crossing_cap = 22;
  int yamada_crossing_cap = 12;
  // Diagrams with more crossings than this are evaluated by the frontier
  // sweep instead of direct state enumeration (identical exact values).
  int bracket_sweep_threshold = 16;

  int resolved_workers() const;
};

/// Kauffman bracket: the sum over the 2^n smoothings of
/// A^{a-b} d^{loops-1}.  Small diagrams enumerate states directly with
/// union-find loop counting; larger ones contract crossings against a
/// frontier of open strand matchings, which computes the same sum without
/// materializing every state.  Crossingless circles each contribute a
/// loop; the one-loop diagram evaluates to 1.
LaurentPolynomial kauffman_bracket(const LinkDiagram& link, const StateSumConfig& cfg = {});
LaurentPolynomial kauffman_bracket(const Diagram& d, const StateSumConfig& cfg = {});

/// Same value, computed by recursive smoothing of one crossing at a time.
/// Independent of the state-sum path; serves as its oracle.
LaurentPolynomial kauffman_bracket_skein(const LinkDiagram& link, const StateSumConfig& cfg = {});

/// (-A^3)^{-writhe} * bracket; requires an orientation.
LaurentPolynomial jones(const LinkDiagram& link, const StateSumConfig& cfg = {});

/// The graph evaluation sum_{F subset E} (-1)^{omega(G-F)} y^{beta(G-F)}
/// at y = -A - 2 - A^{-1}.  The empty graph gives 1, an isolated vertex -1.
LaurentPolynomial graph_weight(const MultiGraph& g);

/// Spatial-graph polynomial over the 3^n crossing states:
/// sum_S A^{m1-m2} * graph_weight(resolved state).
LaurentPolynomial yamada(const Diagram& d, const StateSumConfig& cfg = {});

/// Band-diagram polynomial: every bar resolves into "removed" (weight 1) or
/// "turnback" (weight 1/phi), and the crossingless-bar base case is the
/// bracket of the resulting link.  Canonical fraction over phi^{bars}.
PhiFraction jaeger(const Diagram& d, const StateSumConfig& cfg = {});

/// Independent route for connected diagrams:
/// -yamada(D; A -> A^4) / phi^(|E| - |V| + 1).
PhiFraction jaeger_via_yamada(const Diagram& d, const StateSumConfig& cfg = {});

}  // namespace sgpoly

#endif  // SGPOLY_INVARIANTS_HPP
