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

// Embedded diagram codes.  Conventions: crossing slots counterclockwise,
// understrand at slots 0 and 2; arcs are written [from, to] along the edge
// orientation; complete 4-vertex graphs follow the reference labelling
// (a1,a2,a3 out of one vertex; a6 from the head of a1 to the head of a2;
// a4 from the head of a2 to the head of a3; a5 back from the head of a3).

#include "sgpoly/catalog.hpp"

#include <map>

namespace sgpoly::catalog {

namespace {

const std::map<std::string, const char*>& table() {
  static const std::map<std::string, const char*> data = {

      {"omega1", R"json({
  "nodes": [
    {"id": "u", "kind": "vertex", "slots": 3},
    {"id": "p", "kind": "vertex", "slots": 3},
    {"id": "q", "kind": "vertex", "slots": 3},
    {"id": "w", "kind": "vertex", "slots": 3}
  ],
  "arcs": [
    [["u", 1], ["p", 2]],
    [["u", 0], ["q", 1]],
    [["u", 2], ["w", 1]],
    [["q", 2], ["w", 0]],
    [["w", 2], ["p", 1]],
    [["p", 0], ["q", 0]]
  ],
  "edges": {
    "a1": {"tail": "u", "head": "p", "arcs": [0]},
    "a2": {"tail": "u", "head": "q", "arcs": [1]},
    "a3": {"tail": "u", "head": "w", "arcs": [2]},
    "a4": {"tail": "q", "head": "w", "arcs": [3]},
    "a5": {"tail": "w", "head": "p", "arcs": [4]},
    "a6": {"tail": "p", "head": "q", "arcs": [5]}
  },
  "free_loops": 0
})json"},

      {"omega1-kinked", R"json({
  "nodes": [
    {"id": "u", "kind": "vertex", "slots": 3},
    {"id": "p", "kind": "vertex", "slots": 3},
    {"id": "q", "kind": "vertex", "slots": 3},
    {"id": "w", "kind": "vertex", "slots": 3},
    {"id": "x", "kind": "crossing", "slots": 4}
  ],
  "arcs": [
    [["u", 1], ["p", 2]],
    [["u", 0], ["q", 1]],
    [["u", 2], ["w", 1]],
    [["q", 2], ["w", 0]],
    [["w", 2], ["p", 1]],
    [["p", 0], ["x", 3]],
    [["x", 1], ["x", 0]],
    [["x", 2], ["q", 0]]
  ],
  "edges": {
    "a1": {"tail": "u", "head": "p", "arcs": [0]},
    "a2": {"tail": "u", "head": "q", "arcs": [1]},
    "a3": {"tail": "u", "head": "w", "arcs": [2]},
    "a4": {"tail": "q", "head": "w", "arcs": [3]},
    "a5": {"tail": "w", "head": "p", "arcs": [4]},
    "a6": {"tail": "p", "head": "q", "arcs": [5, 6, 7]}
  },
  "free_loops": 0
})json"},

      {"omega2", R"json({
  "nodes": [
    {"id": "tl", "kind": "vertex", "slots": 3},
    {"id": "tr", "kind": "vertex", "slots": 3},
    {"id": "bl", "kind": "vertex", "slots": 3},
    {"id": "br", "kind": "vertex", "slots": 3},
    {"id": "z0", "kind": "crossing", "slots": 4},
    {"id": "zl", "kind": "crossing", "slots": 4},
    {"id": "zr", "kind": "crossing", "slots": 4}
  ],
  "arcs": [
    [["tl", 0], ["tr", 1]],
    [["tl", 1], ["bl", 1]],
    [["tl", 2], ["zl", 0]],
    [["zl", 2], ["z0", 3]],
    [["z0", 1], ["zr", 0]],
    [["zr", 2], ["br", 1]],
    [["bl", 2], ["br", 2]],
    [["br", 0], ["tr", 0]],
    [["tr", 2], ["zr", 3]],
    [["zr", 1], ["z0", 0]],
    [["z0", 2], ["zl", 3]],
    [["zl", 1], ["bl", 0]]
  ],
  "edges": {
    "a1": {"tail": "tl", "head": "tr", "arcs": [0]},
    "a2": {"tail": "tl", "head": "bl", "arcs": [1]},
    "a3": {"tail": "tl", "head": "br", "arcs": [2, 3, 4, 5]},
    "a4": {"tail": "bl", "head": "br", "arcs": [6]},
    "a5": {"tail": "br", "head": "tr", "arcs": [7]},
    "a6": {"tail": "tr", "head": "bl", "arcs": [8, 9, 10, 11]}
  },
  "free_loops": 0
})json"},

      {"omega3", R"json({
  "nodes": [
    {"id": "x0", "kind": "vertex", "slots": 3},
    {"id": "va", "kind": "vertex", "slots": 3},
    {"id": "vb", "kind": "vertex", "slots": 3},
    {"id": "vc", "kind": "vertex", "slots": 3},
    {"id": "kt", "kind": "crossing", "slots": 4},
    {"id": "kl", "kind": "crossing", "slots": 4},
    {"id": "kr", "kind": "crossing", "slots": 4}
  ],
  "arcs": [
    [["x0", 1], ["vb", 2]],
    [["x0", 2], ["vc", 1]],
    [["x0", 0], ["va", 1]],
    [["vc", 2], ["kl", 3]],
    [["kl", 1], ["kt", 0]],
    [["kt", 2], ["va", 0]],
    [["va", 2], ["kr", 1]],
    [["kr", 3], ["kl", 2]],
    [["kl", 0], ["vb", 1]],
    [["vb", 0], ["kt", 1]],
    [["kt", 3], ["kr", 0]],
    [["kr", 2], ["vc", 0]]
  ],
  "edges": {
    "a1": {"tail": "x0", "head": "vb", "arcs": [0]},
    "a2": {"tail": "x0", "head": "vc", "arcs": [1]},
    "a3": {"tail": "x0", "head": "va", "arcs": [2]},
    "a4": {"tail": "vc", "head": "va", "arcs": [3, 4, 5]},
    "a5": {"tail": "va", "head": "vb", "arcs": [6, 7, 8]},
    "a6": {"tail": "vb", "head": "vc", "arcs": [9, 10, 11]}
  },
  "free_loops": 0
})json"},

      {"omega4", R"json({
  "nodes": [
    {"id": "x0", "kind": "vertex", "slots": 3},
    {"id": "va", "kind": "vertex", "slots": 3},
    {"id": "vb", "kind": "vertex", "slots": 3},
    {"id": "vc", "kind": "vertex", "slots": 3},
    {"id": "kt", "kind": "crossing", "slots": 4},
    {"id": "kl", "kind": "crossing", "slots": 4},
    {"id": "kr", "kind": "crossing", "slots": 4}
  ],
  "arcs": [
    [["x0", 2], ["vc", 1]],
    [["x0", 0], ["va", 2]],
    [["x0", 1], ["vb", 1]],
    [["va", 1], ["vb", 2]],
    [["vb", 0], ["kl", 3]],
    [["kl", 1], ["kt", 0]],
    [["kt", 2], ["kr", 1]],
    [["kr", 3], ["vc", 0]],
    [["vc", 2], ["kl", 2]],
    [["kl", 0], ["kt", 1]],
    [["kt", 3], ["kr", 0]],
    [["kr", 2], ["va", 0]]
  ],
  "edges": {
    "a1": {"tail": "x0", "head": "vc", "arcs": [0]},
    "a2": {"tail": "x0", "head": "va", "arcs": [1]},
    "a3": {"tail": "x0", "head": "vb", "arcs": [2]},
    "a4": {"tail": "va", "head": "vb", "arcs": [3]},
    "a5": {"tail": "vb", "head": "vc", "arcs": [4, 5, 6, 7]},
    "a6": {"tail": "vc", "head": "va", "arcs": [8, 9, 10, 11]}
  },
  "free_loops": 0
})json"},

      {"omega5", R"json({
  "nodes": [
    {"id": "x0", "kind": "vertex", "slots": 3},
    {"id": "va", "kind": "vertex", "slots": 3},
    {"id": "vb", "kind": "vertex", "slots": 3},
    {"id": "vc", "kind": "vertex", "slots": 3},
    {"id": "kt", "kind": "crossing", "slots": 4},
    {"id": "kl", "kind": "crossing", "slots": 4},
    {"id": "kr", "kind": "crossing", "slots": 4}
  ],
  "arcs": [
    [["x0", 1], ["vb", 0]],
    [["x0", 0], ["va", 1]],
    [["x0", 2], ["vc", 1]],
    [["va", 2], ["vc", 0]],
    [["vc", 2], ["vb", 2]],
    [["vb", 1], ["kl", 2]],
    [["kl", 0], ["kt", 1]],
    [["kt", 3], ["kr", 0]],
    [["kr", 2], ["kl", 3]],
    [["kl", 1], ["kt", 0]],
    [["kt", 2], ["kr", 1]],
    [["kr", 3], ["va", 0]]
  ],
  "edges": {
    "a1": {"tail": "x0", "head": "vb", "arcs": [0]},
    "a2": {"tail": "x0", "head": "va", "arcs": [1]},
    "a3": {"tail": "x0", "head": "vc", "arcs": [2]},
    "a4": {"tail": "va", "head": "vc", "arcs": [3]},
    "a5": {"tail": "vc", "head": "vb", "arcs": [4]},
    "a6": {"tail": "vb", "head": "va", "arcs": [5, 6, 7, 8, 9, 10, 11]}
  },
  "free_loops": 0
})json"},

      {"omega6", R"json({
  "nodes": [
    {"id": "p1", "kind": "vertex", "slots": 3},
    {"id": "p2", "kind": "vertex", "slots": 3},
    {"id": "p3", "kind": "vertex", "slots": 3},
    {"id": "p4", "kind": "vertex", "slots": 3},
    {"id": "ca", "kind": "crossing", "slots": 4},
    {"id": "cb", "kind": "crossing", "slots": 4},
    {"id": "cc", "kind": "crossing", "slots": 4},
    {"id": "cd", "kind": "crossing", "slots": 4}
  ],
  "arcs": [
    [["p1", 1], ["p3", 0]],
    [["p1", 2], ["cb", 1]],
    [["cb", 3], ["ca", 2]],
    [["ca", 0], ["p2", 2]],
    [["p1", 0], ["cd", 2]],
    [["cd", 0], ["p4", 0]],
    [["p2", 0], ["p4", 1]],
    [["p4", 2], ["cc", 3]],
    [["cc", 1], ["cb", 2]],
    [["cb", 0], ["ca", 1]],
    [["ca", 3], ["cc", 0]],
    [["cc", 2], ["p3", 2]],
    [["p3", 1], ["cd", 1]],
    [["cd", 3], ["p2", 1]]
  ],
  "edges": {
    "a1": {"tail": "p1", "head": "p3", "arcs": [0]},
    "a2": {"tail": "p1", "head": "p2", "arcs": [1, 2, 3]},
    "a3": {"tail": "p1", "head": "p4", "arcs": [4, 5]},
    "a4": {"tail": "p2", "head": "p4", "arcs": [6]},
    "a5": {"tail": "p4", "head": "p3", "arcs": [7, 8, 9, 10, 11]},
    "a6": {"tail": "p3", "head": "p2", "arcs": [12, 13]}
  },
  "free_loops": 0
})json"},

      {"omega7", R"json({
  "nodes": [
    {"id": "B", "kind": "vertex", "slots": 3},
    {"id": "A", "kind": "vertex", "slots": 3},
    {"id": "D", "kind": "vertex", "slots": 3},
    {"id": "C", "kind": "vertex", "slots": 3},
    {"id": "x1", "kind": "crossing", "slots": 4},
    {"id": "x2", "kind": "crossing", "slots": 4},
    {"id": "x3", "kind": "crossing", "slots": 4},
    {"id": "x4", "kind": "crossing", "slots": 4}
  ],
  "arcs": [
    [["B", 1], ["A", 0]],
    [["B", 0], ["x2", 1]],
    [["x2", 3], ["x3", 2]],
    [["x3", 0], ["D", 1]],
    [["B", 2], ["x1", 2]],
    [["x1", 0], ["x3", 1]],
    [["x3", 3], ["C", 2]],
    [["D", 2], ["C", 1]],
    [["C", 0], ["x4", 0]],
    [["x4", 2], ["x1", 1]],
    [["x1", 3], ["A", 2]],
    [["A", 1], ["x2", 0]],
    [["x2", 2], ["x4", 1]],
    [["x4", 3], ["D", 0]]
  ],
  "edges": {
    "a1": {"tail": "B", "head": "A", "arcs": [0]},
    "a2": {"tail": "B", "head": "D", "arcs": [1, 2, 3]},
    "a3": {"tail": "B", "head": "C", "arcs": [4, 5, 6]},
    "a4": {"tail": "D", "head": "C", "arcs": [7]},
    "a5": {"tail": "C", "head": "A", "arcs": [8, 9, 10]},
    "a6": {"tail": "A", "head": "D", "arcs": [11, 12, 13]}
  },
  "free_loops": 0
})json"},

      {"omega8", R"json({
  "nodes": [
    {"id": "vl", "kind": "vertex", "slots": 3},
    {"id": "vr", "kind": "vertex", "slots": 3},
    {"id": "c8", "kind": "vertex", "slots": 3},
    {"id": "d8", "kind": "vertex", "slots": 3},
    {"id": "x1", "kind": "crossing", "slots": 4},
    {"id": "x2", "kind": "crossing", "slots": 4},
    {"id": "x3", "kind": "crossing", "slots": 4},
    {"id": "x4", "kind": "crossing", "slots": 4}
  ],
  "arcs": [
    [["c8", 0], ["x4", 0]],
    [["x4", 2], ["x1", 1]],
    [["x1", 3], ["x2", 0]],
    [["x2", 2], ["vr", 0]],
    [["c8", 1], ["x3", 3]],
    [["x3", 1], ["x1", 0]],
    [["x1", 2], ["x2", 1]],
    [["x2", 3], ["vl", 0]],
    [["c8", 2], ["d8", 1]],
    [["vl", 1], ["d8", 2]],
    [["d8", 0], ["vr", 2]],
    [["vr", 1], ["x4", 1]],
    [["x4", 3], ["x3", 0]],
    [["x3", 2], ["vl", 2]]
  ],
  "edges": {
    "a1": {"tail": "c8", "head": "vr", "arcs": [0, 1, 2, 3]},
    "a2": {"tail": "c8", "head": "vl", "arcs": [4, 5, 6, 7]},
    "a3": {"tail": "c8", "head": "d8", "arcs": [8]},
    "a4": {"tail": "vl", "head": "d8", "arcs": [9]},
    "a5": {"tail": "d8", "head": "vr", "arcs": [10]},
    "a6": {"tail": "vr", "head": "vl", "arcs": [11, 12, 13]}
  },
  "free_loops": 0
})json"},

      {"omega9", R"json({
  "nodes": [
    {"id": "x9", "kind": "vertex", "slots": 3},
    {"id": "va", "kind": "vertex", "slots": 3},
    {"id": "vb", "kind": "vertex", "slots": 3},
    {"id": "c9", "kind": "vertex", "slots": 3},
    {"id": "x1", "kind": "crossing", "slots": 4},
    {"id": "x2", "kind": "crossing", "slots": 4},
    {"id": "x3", "kind": "crossing", "slots": 4},
    {"id": "x4", "kind": "crossing", "slots": 4}
  ],
  "arcs": [
    [["x9", 2], ["c9", 1]],
    [["x9", 1], ["va", 1]],
    [["x9", 0], ["vb", 2]],
    [["va", 2], ["vb", 1]],
    [["vb", 0], ["x4", 3]],
    [["x4", 1], ["x2", 2]],
    [["x2", 0], ["x1", 3]],
    [["x1", 1], ["x4", 2]],
    [["x4", 0], ["c9", 0]],
    [["c9", 2], ["x3", 3]],
    [["x3", 1], ["x1", 0]],
    [["x1", 2], ["x2", 1]],
    [["x2", 3], ["x3", 2]],
    [["x3", 0], ["va", 0]]
  ],
  "edges": {
    "a1": {"tail": "x9", "head": "c9", "arcs": [0]},
    "a2": {"tail": "x9", "head": "va", "arcs": [1]},
    "a3": {"tail": "x9", "head": "vb", "arcs": [2]},
    "a4": {"tail": "va", "head": "vb", "arcs": [3]},
    "a5": {"tail": "vb", "head": "c9", "arcs": [4, 5, 6, 7, 8]},
    "a6": {"tail": "c9", "head": "va", "arcs": [9, 10, 11, 12, 13]}
  },
  "free_loops": 0
})json"},

      {"omega10", R"json({
  "nodes": [
    {"id": "m", "kind": "vertex", "slots": 3},
    {"id": "wl", "kind": "vertex", "slots": 3},
    {"id": "wr", "kind": "vertex", "slots": 3},
    {"id": "c10", "kind": "vertex", "slots": 3},
    {"id": "x1", "kind": "crossing", "slots": 4},
    {"id": "x2", "kind": "crossing", "slots": 4},
    {"id": "x3", "kind": "crossing", "slots": 4},
    {"id": "x4", "kind": "crossing", "slots": 4}
  ],
  "arcs": [
    [["m", 2], ["c10", 1]],
    [["m", 1], ["wl", 0]],
    [["m", 0], ["wr", 1]],
    [["wl", 1], ["x3", 3]],
    [["x3", 1], ["x1", 0]],
    [["x1", 2], ["x2", 1]],
    [["x2", 3], ["x3", 2]],
    [["x3", 0], ["x4", 3]],
    [["x4", 1], ["x2", 2]],
    [["x2", 0], ["x1", 3]],
    [["x1", 1], ["x4", 2]],
    [["x4", 0], ["wr", 0]],
    [["wr", 2], ["c10", 0]],
    [["c10", 2], ["wl", 2]]
  ],
  "edges": {
    "a1": {"tail": "m", "head": "c10", "arcs": [0]},
    "a2": {"tail": "m", "head": "wl", "arcs": [1]},
    "a3": {"tail": "m", "head": "wr", "arcs": [2]},
    "a4": {"tail": "wl", "head": "wr", "arcs": [3, 4, 5, 6, 7, 8, 9, 10, 11]},
    "a5": {"tail": "wr", "head": "c10", "arcs": [12]},
    "a6": {"tail": "c10", "head": "wl", "arcs": [13]}
  },
  "free_loops": 0
})json"},

      {"theta-planar", R"json({
  "nodes": [
    {"id": "v1", "kind": "vertex", "slots": 3},
    {"id": "v2", "kind": "vertex", "slots": 3}
  ],
  "arcs": [
    [["v1", 2], ["v2", 0]],
    [["v1", 1], ["v2", 1]],
    [["v1", 0], ["v2", 2]]
  ],
  "edges": {
    "e1": {"tail": "v1", "head": "v2", "arcs": [0]},
    "e2": {"tail": "v1", "head": "v2", "arcs": [1]},
    "e3": {"tail": "v1", "head": "v2", "arcs": [2]}
  },
  "free_loops": 0
})json"},

      {"theta-knotted", R"json({
  "nodes": [
    {"id": "v1", "kind": "vertex", "slots": 3},
    {"id": "v2", "kind": "vertex", "slots": 3},
    {"id": "c1", "kind": "crossing", "slots": 4},
    {"id": "c2", "kind": "crossing", "slots": 4},
    {"id": "c3", "kind": "crossing", "slots": 4},
    {"id": "c4", "kind": "crossing", "slots": 4}
  ],
  "arcs": [
    [["v1", 0], ["c2", 1]],
    [["c2", 3], ["c1", 0]],
    [["c1", 2], ["c3", 1]],
    [["c3", 3], ["c2", 0]],
    [["c2", 2], ["v2", 0]],
    [["v1", 2], ["v2", 1]],
    [["v1", 1], ["c4", 0]],
    [["c4", 2], ["c1", 1]],
    [["c1", 3], ["c3", 0]],
    [["c3", 2], ["c4", 1]],
    [["c4", 3], ["v2", 2]]
  ],
  "edges": {
    "e1": {"tail": "v1", "head": "v2", "arcs": [0, 1, 2, 3, 4]},
    "e2": {"tail": "v1", "head": "v2", "arcs": [5]},
    "e3": {"tail": "v1", "head": "v2", "arcs": [6, 7, 8, 9, 10]}
  },
  "free_loops": 0
})json"},

      {"unknot", R"json({
  "nodes": [{"id": "v", "kind": "vertex", "slots": 2}],
  "arcs": [[["v", 0], ["v", 1]]],
  "edges": {"k": {"tail": "v", "head": "v", "arcs": [0]}},
  "free_loops": 0
})json"},

      {"unknot-kinked", R"json({
  "nodes": [
    {"id": "v", "kind": "vertex", "slots": 2},
    {"id": "x", "kind": "crossing", "slots": 4}
  ],
  "arcs": [
    [["v", 0], ["x", 3]],
    [["x", 1], ["x", 0]],
    [["x", 2], ["v", 1]]
  ],
  "edges": {"k": {"tail": "v", "head": "v", "arcs": [0, 1, 2]}},
  "free_loops": 0
})json"},

      {"trefoil", R"json({
  "nodes": [
    {"id": "v", "kind": "vertex", "slots": 2},
    {"id": "x1", "kind": "crossing", "slots": 4},
    {"id": "x2", "kind": "crossing", "slots": 4},
    {"id": "x3", "kind": "crossing", "slots": 4}
  ],
  "arcs": [
    [["v", 1], ["x1", 0]],
    [["x1", 2], ["x2", 3]],
    [["x2", 1], ["x3", 0]],
    [["x3", 2], ["x1", 3]],
    [["x1", 1], ["x2", 0]],
    [["x2", 2], ["x3", 3]],
    [["x3", 1], ["v", 0]]
  ],
  "edges": {"k": {"tail": "v", "head": "v", "arcs": [0, 1, 2, 3, 4, 5, 6]}},
  "free_loops": 0
})json"},

      {"figure-eight", R"json({
  "nodes": [
    {"id": "v", "kind": "vertex", "slots": 2},
    {"id": "c1", "kind": "crossing", "slots": 4},
    {"id": "c2", "kind": "crossing", "slots": 4},
    {"id": "c3", "kind": "crossing", "slots": 4},
    {"id": "c4", "kind": "crossing", "slots": 4}
  ],
  "arcs": [
    [["v", 1], ["c2", 0]],
    [["c2", 2], ["c1", 3]],
    [["c1", 1], ["c4", 0]],
    [["c4", 2], ["c3", 1]],
    [["c3", 3], ["c1", 0]],
    [["c1", 2], ["c2", 3]],
    [["c2", 1], ["c3", 0]],
    [["c3", 2], ["c4", 1]],
    [["c4", 3], ["v", 0]]
  ],
  "edges": {"k": {"tail": "v", "head": "v", "arcs": [0, 1, 2, 3, 4, 5, 6, 7, 8]}},
  "free_loops": 0
})json"},

      {"hopf", R"json({
  "nodes": [
    {"id": "c1", "kind": "crossing", "slots": 4},
    {"id": "c2", "kind": "crossing", "slots": 4}
  ],
  "arcs": [
    [["c1", 1], ["c2", 0]],
    [["c2", 2], ["c1", 3]],
    [["c1", 2], ["c2", 3]],
    [["c2", 1], ["c1", 0]]
  ],
  "edges": {},
  "free_loops": 0
})json"},

      {"kink", R"json({
  "nodes": [{"id": "x", "kind": "crossing", "slots": 4}],
  "arcs": [
    [["x", 1], ["x", 0]],
    [["x", 2], ["x", 3]]
  ],
  "edges": {},
  "free_loops": 0
})json"},

  };
  return data;
}

}  // namespace

const char* embedded_json_raw(const std::string& name) {
  auto it = table().find(name);
  return it == table().end() ? nullptr : it->second;
}

}  // namespace sgpoly::catalog
