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

#ifndef SGPOLY_POLY_JSON_HPP
#define SGPOLY_POLY_JSON_HPP

#include <string>

#include "sgpoly/laurent.hpp"
#include "sgpoly/phi_fraction.hpp"

namespace sgpoly {

// {"terms": {"<exponent>": <coefficient>}, "phi_power": k}; coefficients too
// wide for 64 bits are emitted as strings.  Plain polynomials round-trip as
// phi_power 0 (the field may be omitted on input).

std::string poly_to_json(const LaurentPolynomial& p);
LaurentPolynomial poly_from_json(const std::string& text);

std::string frac_to_json(const PhiFraction& f);
PhiFraction frac_from_json(const std::string& text);

}  // namespace sgpoly

#endif  // SGPOLY_POLY_JSON_HPP
