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

#ifndef SGPOLY_BANDED_HPP
#define SGPOLY_BANDED_HPP

#include <map>
#include <string>
#include <vector>

#include "sgpoly/diagram.hpp"

namespace sgpoly {

// Blackboard-framed doubling.  Every arc becomes two parallel strands, every
// crossing four crossings, every vertex a disk whose boundary joins the
// strand pairs of cyclically adjacent edge ends.  The two parallels of each
// band are oppositely directed: the copy on the left of the edge's
// orientation keeps the edge's direction.

/// Link diagram that still knows where each doubled edge (band) starts, so
/// that half twists and band smoothings can be applied there.  Ports
/// 0..4*crossings-1 are crossing slots; ports >= 4*crossings are 2-valent
/// junction points that dissolve on conversion to a LinkDiagram.
class BandedLink {
 public:
  struct Band {
    int left_piece = -1;   // doubled copies of the band's first arc
    int right_piece = -1;
    bool left_tail_first = true;   // piece endpoint 0 is the tail-side end
    bool right_tail_first = true;
    int inserted_twists = 0;
  };

  int crossings = 0;
  int junction_ports = 0;
  std::vector<std::pair<int, int>> pieces;
  std::vector<std::uint8_t> under_flow02, over_flow13;
  std::map<std::string, Band> bands;
  long free_loops = 0;

  int port(int c, int s) const { return 4 * c + s; }
  int new_crossing(bool u02, bool o13);
  int new_junction() { return 4 * crossings + junction_ports++; }

  /// Dissolves junction ports; closed junction-only circles become free
  /// loops.
  LinkDiagram to_link() const;
};

/// The 2-parallel with band handles for every edge of `d`.
BandedLink double_banded(const Diagram& d);

/// Plain 2-parallel.
LinkDiagram double_diagram(const Diagram& d);

/// Inserts |n| half twists between the two strands of `band`, at the band
/// start.  A single positive half twist creates a positive kink when the
/// band closes trivially (bracket -A^3), and each positive half twist
/// contributes -1 to the writhe of the oppositely-directed boundary.
void insert_half_twists(BandedLink& link, const std::string& band, int n);

/// Cuts the band at its start and caps both sides with turnbacks joining
/// the two strands (the B_- resolution of a bar).
void smooth_band(BandedLink& link, const std::string& band);

/// Band diagram of a spatial graph decorated with bars, one per edge: the
/// raw construction puts a bar on every doubled arc, sliding them together
/// collapses adjacent pairs to a single bar, so each band keeps exactly
/// one.  Vertex-free closed strands are not bands and carry none.
struct BarDiagram {
  Diagram source;
  std::map<std::string, int> bar;  // edge name -> 0 or 1

  int bar_count() const;
  /// Resolves each barred edge: bit set in `turnback_mask` (indexed by the
  /// order of barred edges in `bar`) smooths the band, otherwise the bar is
  /// simply removed.  Returns the resulting link diagram.
  LinkDiagram resolve(unsigned long turnback_mask) const;
  std::vector<std::string> barred_edges() const;
};

BarDiagram bar_diagram(const Diagram& d);

}  // namespace sgpoly

#endif  // SGPOLY_BANDED_HPP
