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

#ifndef SGPOLY_CATALOG_HPP
#define SGPOLY_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "sgpoly/diagram.hpp"
#include "sgpoly/laurent.hpp"

namespace sgpoly {

/// Curated diagram with reference values where the literature provides
/// them.  Every entry passes validate().
struct CatalogEntry {
  std::string name;
  std::string description;
  Diagram diagram;
  GraphKind kind = GraphKind::Other;
  /// Reference state-sum polynomial; `exact` entries match it on the nose,
  /// the rest up to a unit (-A)^k.
  std::optional<LaurentPolynomial> expected_yamada;
  bool exact = false;
};

namespace catalog {

/// Names of the built-in entries, in table order.
std::vector<std::string> list();

/// Loads a built-in entry by name, or a diagram file by path.  Throws
/// std::invalid_argument with a parse/validation message on bad input.
CatalogEntry load(const std::string& name_or_path);

/// Writes the entry's diagram as JSON.
void save(const CatalogEntry& entry, const std::string& path);

/// The raw embedded JSON (used by save and the loader).
const char* embedded_json(const std::string& name);

}  // namespace catalog

}  // namespace sgpoly

#endif  // SGPOLY_CATALOG_HPP
