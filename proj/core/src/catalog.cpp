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

#include "sgpoly/catalog.hpp"

#include <fstream>
#include <sstream>

namespace sgpoly {

namespace catalog {

const char* embedded_json_raw(const std::string& name);  // catalog_data.cpp

namespace {

struct Meta {
  const char* name;
  const char* description;
  const char* expected_yamada;  // reference state-sum polynomial, or nullptr
  bool exact;
};

// The ten 4-vertex graphs are ordered by crossing number; the reference
// polynomials for them and the two theta curves are the published table
// values used as golden data.  "exact" marks entries whose codes are pinned
// so the match holds on the nose, not merely up to a unit.
const Meta kMeta[] = {
    {"omega1", "planar complete graph on four vertices",
     "A^3+2A+2A^-1+A^-3", true},
    {"omega2", "three-crossing embedding; the quadrilateral through both diagonals is a trefoil",
     "A^8+A^6+A^5-A^4+A^3-2A^2+A-1+A^-1+A^-2+A^-3+A^-4+A^-5", false},
    {"omega3", "three-crossing embedding with a knotted triangle",
     "2A^6+A^4+A^3-2A^2-4-A^-1-3A^-2-A^-3+A^-7", false},
    {"omega4", "three-crossing embedding, knotted triangle meeting the hub vertex",
     "A^8-A^7+A^6-A^4+A^3-2A^2+A-2-A^-2-A^-3-A^-4-A^-6", false},
    {"omega5", "three-crossing embedding with one edge tied into a trefoil",
     "A^8-A^7+A^6-A^5-A^4-2A^2+A-1+2A^-1+A^-2+2A^-3+A^-4+2A^-5+A^-7", false},
    {"omega6", "four-crossing embedding with linked opposite edges",
     "A^7-A^6+A^4+A^2+3A+3A^-1-A^-2+A^-3-A^-4-2A^-5+A^-6-A^-7+A^-9", false},
    {"omega7", "four-crossing embedding whose quadrilateral cycle is a figure-eight knot",
     "-A^8-A^5+A^4+A^3+3A+3A^-1+A^-3+A^-4-A^-5-A^-8", true},
    {"omega8", "four-crossing embedding with an outer detour",
     "A^9-A^8+2A^6-A^5+A^4+2A^3-A^2+2A-2+A^-1-A^-2-A^-3+2A^-4+2A^-7", false},
    {"omega9", "four-crossing embedding with a figure-eight triangle",
     "-A^8+A^7-A^5+2A^4+2A-1+2A^-1-A^-2+A^-3+A^-4-A^-5+A^-6+A^-7-A^-8+A^-9", false},
    {"omega10", "four-crossing embedding with one edge tied into a figure-eight",
     "A^9-A^8+A^7-A^5+A^4+2A+2A^-1+A^-4-A^-5+A^-7-A^-8+A^-9", false},
    {"theta-planar", "planar theta curve",
     "-A^2-A-2-A^-1-A^-2", true},
    {"theta-knotted", "four-crossing theta curve with a trefoil constituent",
     "A^7-A^5-A^3-A^2-1-A^-2-A^-5-A^-8", false},
    {"unknot", "crossingless unknot with one marked point", nullptr, false},
    {"unknot-kinked", "unknot with one positive kink", nullptr, false},
    {"trefoil", "right-handed trefoil, three-crossing diagram", nullptr, false},
    {"figure-eight", "figure-eight knot, four-crossing diagram", nullptr, false},
    {"hopf", "Hopf link, two-crossing diagram", nullptr, false},
    {"kink", "one-crossing unknot diagram (positive curl)", nullptr, false},
};

const Meta* find_meta(const std::string& name) {
  for (const Meta& m : kMeta)
    if (name == m.name) return &m;
  return nullptr;
}

CatalogEntry make_entry(const std::string& name, const std::string& json_text) {
  CatalogEntry entry;
  entry.name = name;
  entry.diagram = diagram_from_json(json_text);
  auto bad = validate(entry.diagram);
  if (!bad.empty())
    throw std::invalid_argument("catalog entry '" + name + "' is invalid: " + bad.front());
  entry.kind = classify(entry.diagram);
  if (const Meta* m = find_meta(name)) {
    entry.description = m->description;
    entry.exact = m->exact;
    if (m->expected_yamada)
      entry.expected_yamada = LaurentPolynomial::from_string(m->expected_yamada);
  }
  return entry;
}

}  // namespace

std::vector<std::string> list() {
  std::vector<std::string> names;
  for (const Meta& m : kMeta) names.push_back(m.name);
  return names;
}

const char* embedded_json(const std::string& name) { return embedded_json_raw(name); }

CatalogEntry load(const std::string& name_or_path) {
  if (const char* raw = embedded_json_raw(name_or_path))
    return make_entry(name_or_path, raw);
  std::ifstream in(name_or_path);
  if (!in)
    throw std::invalid_argument("no catalog entry or readable file named '" + name_or_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string base = name_or_path;
  auto slash = base.find_last_of('/');
  if (slash != std::string::npos) base = base.substr(slash + 1);
  if (base.size() > 5 && base.substr(base.size() - 5) == ".json") base.resize(base.size() - 5);
  return make_entry(base, buf.str());
}

void save(const CatalogEntry& entry, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << diagram_to_json(entry.diagram, 2) << "\n";
}

}  // namespace catalog

}  // namespace sgpoly
