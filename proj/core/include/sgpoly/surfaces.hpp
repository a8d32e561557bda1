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

#ifndef SGPOLY_SURFACES_HPP
#define SGPOLY_SURFACES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sgpoly/banded.hpp"
#include "sgpoly/diagram.hpp"
#include "sgpoly/invariants.hpp"
#include "sgpoly/phi_fraction.hpp"

namespace sgpoly {

/// Thrown when an operation receives a diagram of the wrong graph kind.
struct KindMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Canonical labelling of a theta diagram: v1/v2 and edges e1,e2,e3 so that
/// the counterclockwise edge order is (e3,e2,e1) at v1 and (e1,e2,e3) at v2,
/// with every edge read from v1 to v2.  `flip[i]` marks edges whose stored
/// orientation runs v2 -> v1.  When the diagram's vertex rotations cannot
/// realize those cyclic orders, a deterministic fallback labelling is
/// returned instead: the crossing sums and twist parameters do not depend
/// on the choice.
struct ThetaLabeling {
  int v1 = -1, v2 = -1;
  std::array<std::string, 3> edge;  // e1, e2, e3
  std::array<bool, 3> flip = {false, false, false};
};

std::optional<ThetaLabeling> theta_labeling(const Diagram& d);

/// Signed crossing sums between edge pairs and the half-twist counts that
/// cancel the band surface's linking form.
struct TwistData {
  GraphKind kind = GraphKind::Other;
  std::vector<std::string> edge_names;     // a1..a6, e1..e3 or the knot edge
  std::vector<std::vector<int>> w;         // symmetric crossing-sum matrix
  std::vector<int> params;                 // n1..n6 / m1..m3 / single knot twist

  int param_sum() const;
};

/// The symmetric matrix w[i][j] of signed crossings between edges i and j
/// (self-crossings on the diagonal), in the canonical labelling of the
/// diagram's kind.
TwistData crossing_matrix(const Diagram& d);

/// crossing_matrix plus the twist parameters from the closed linear
/// formulas (six for a complete 4-vertex graph, three for a theta, and
/// -2 * writhe for a knot).
TwistData twist_parameters(const Diagram& d);

struct AssociatedLink {
  LinkDiagram link;
  TwistData data;
  std::map<std::string, int> twists;  // band name -> inserted half twists
};

/// Doubles the diagram and inserts the twist parameters into each band.
/// The boundary orientation makes writhe(link) == -sum(params), which is
/// asserted.
AssociatedLink associated_link(const Diagram& d, const StateSumConfig& cfg = {});

/// f_n = A^{n-2} (1 - (-A^-4)^n) / (1 + A^-4); always a Laurent polynomial.
LaurentPolynomial twist_coefficient(int n);

/// (-A^4)^{sum of twist parameters} * jaeger for theta and K4 graphs,
/// A^{-8 writhe} * jaeger for knots.
PhiFraction normalized_jaeger(const Diagram& d, const StateSumConfig& cfg = {});

/// (-A)^{sum of twist parameters} * yamada (A^{-2 writhe} for knots).
LaurentPolynomial normalized_yamada(const Diagram& d, const StateSumConfig& cfg = {});

/// Writhe of the knot traced by a cycle of edges, signs taken with respect
/// to a coherent traversal of the cycle.
int cycle_writhe(const Diagram& d, const std::set<std::string>& cycle);

/// Checks 2 * cycle_writhe(C) == -sum of the cycle's twist parameters for
/// every simple cycle of a K4 diagram; returns the violating cycles.
std::vector<std::string> twist_writhe_violations(const Diagram& d);

}  // namespace sgpoly

#endif  // SGPOLY_SURFACES_HPP
