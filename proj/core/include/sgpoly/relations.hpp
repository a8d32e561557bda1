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

#ifndef SGPOLY_RELATIONS_HPP
#define SGPOLY_RELATIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgpoly/diagram.hpp"
#include "sgpoly/invariants.hpp"
#include "sgpoly/phi_fraction.hpp"
#include "sgpoly/surfaces.hpp"

namespace sgpoly {

// Each verifier recomputes both sides of one identity from the raw diagram,
// sharing no intermediates, so a defect in any pipeline stage breaks the
// comparison instead of cancelling.

struct VerificationReport {
  std::string identity;
  PhiFraction lhs, rhs;
  bool equal = false;
  std::vector<std::pair<std::string, PhiFraction>> terms;
  std::string note;

  std::string to_json(int indent = -1) const;
};

/// Normalized band polynomial of a theta curve against the Jones polynomial
/// of its associated link and constituent knots.
VerificationReport verify_theta_theorem(const Diagram& theta, const StateSumConfig& cfg = {});

/// Closed form for the Jones polynomial of the twisted 3-band boundary
/// L(m1,m2,m3); `override_m` replaces the computed twist parameters (any
/// parity is allowed).
VerificationReport verify_theta_jones_formula(const Diagram& theta,
                                              std::optional<std::array<int, 3>> override_m = {},
                                              const StateSumConfig& cfg = {});

/// Closed form for the Jones polynomial of the twisted 6-band boundary of a
/// complete 4-vertex spatial graph.
VerificationReport verify_k4_jones_formula(const Diagram& k4, const StateSumConfig& cfg = {});

/// Normalized band polynomial of a K4 graph against its six theta
/// subgraphs, seven constituent knots and the associated link.
VerificationReport verify_main_theorem(const Diagram& k4, const StateSumConfig& cfg = {});

/// The same relation on the state-sum side, after A -> A^4.
VerificationReport verify_yamada_corollary(const Diagram& k4, const StateSumConfig& cfg = {});

/// All-links form: every term a Jones polynomial of a twisted 2-parallel.
VerificationReport verify_links_corollary(const Diagram& k4, const StateSumConfig& cfg = {});

/// Bar-resolution closed form: the band polynomial as a phi-weighted sum of
/// fourteen brackets of subgraph 2-parallels.
VerificationReport verify_bar_expansion(const Diagram& k4, const StateSumConfig& cfg = {});

/// Knot base cases: band polynomial = <2-parallel> + 1/phi, and the
/// normalized form exceeds the associated link's Jones polynomial by 1/phi.
VerificationReport verify_knot_normalization(const Diagram& knot, const StateSumConfig& cfg = {});

}  // namespace sgpoly

#endif  // SGPOLY_RELATIONS_HPP
