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

#include "sgpoly/poly_json.hpp"

#include <json.hpp>

namespace sgpoly {

using nlohmann::json;

namespace {

json terms_json(const LaurentPolynomial& p) {
  json t = json::object();
  for (const auto& [e, c] : p.terms()) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
      t[std::to_string(e)] = static_cast<std::int64_t>(c);
    else
      t[std::to_string(e)] = c.str();
  }
  return t;
}

LaurentPolynomial terms_from(const json& t) {
  LaurentPolynomial p;
  for (auto it = t.begin(); it != t.end(); ++it) {
    int e = std::stoi(it.key());
    BigInt c;
    if (it.value().is_string())
      c = BigInt(it.value().get<std::string>());
    else
      c = BigInt(it.value().get<std::int64_t>());
    p.add_term(e, c);
  }
  return p;
}

}  // namespace

std::string poly_to_json(const LaurentPolynomial& p) {
  json j;
  j["terms"] = terms_json(p);
  j["phi_power"] = 0;
  return j.dump();
}

LaurentPolynomial poly_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.value("phi_power", 0) != 0)
    throw std::invalid_argument("expected a polynomial, got a phi fraction");
  return terms_from(j.at("terms"));
}

std::string frac_to_json(const PhiFraction& f) {
  json j;
  j["terms"] = terms_json(f.num());
  j["phi_power"] = f.phi_power();
  return j.dump();
}

PhiFraction frac_from_json(const std::string& text) {
  json j = json::parse(text);
  return PhiFraction(terms_from(j.at("terms")), j.value("phi_power", 0u));
}

}  // namespace sgpoly
