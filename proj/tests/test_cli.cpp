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

#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "sgpoly/catalog.hpp"
#include "sgpoly/invariants.hpp"
#include "sgpoly/poly_json.hpp"

using namespace sgpoly;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("invariants command") {
  Result r = run({"invariants", "omega1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("yamada: A^3+2*A+2*A^-1+A^-3") != std::string::npos);
  CHECK(r.out.find("twists: a1=0") != std::string::npos);

  Result missing = run({"invariants", "missing.json"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("missing.json") != std::string::npos);

  Result capped = run({"invariants", "omega7", "--max-crossings", "2"});
  CHECK(capped.code == 2);
}

TEST_CASE("machine output round trips") {
  Result r = run({"invariants", "omega7", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "K4");
  CHECK(j["twists"] == nlohmann::json::array({-2, 0, 0, 2, 0, 0}));
  StateSumConfig cfg;
  LaurentPolynomial y = poly_from_json(j["yamada"].dump());
  CHECK(y == yamada(catalog::load("omega7").diagram, cfg));
  PhiFraction jf = frac_from_json(j["jaeger"].dump());
  CHECK(jf == jaeger(catalog::load("omega7").diagram, cfg));
}

TEST_CASE("identical invocations give identical bytes") {
  Result a = run({"invariants", "omega2", "--json"});
  Result b = run({"invariants", "omega2", "--json"});
  CHECK(a.out == b.out);
}

TEST_CASE("verify command and exit codes") {
  CHECK(run({"verify", "omega1", "--identity", "main"}).code == 0);
  Result r = run({"verify", "omega1", "--identity", "main"});
  CHECK(r.out.find("equal") != std::string::npos);
  CHECK(r.out.find("lhs = ") != std::string::npos);
  CHECK(run({"verify", "theta-planar", "--identity", "main"}).code == 4);
  CHECK(run({"verify", "theta-planar", "--identity", "theta"}).code == 0);
  CHECK(run({"verify", "trefoil", "--identity", "knot"}).code == 0);
  CHECK(run({"verify", "omega1"}).code == 0);  // every identity for the kind
}

TEST_CASE("table command") {
  Result r = run({"table1"});
  CHECK(r.code == 0);
  for (int i = 1; i <= 10; ++i)
    CHECK(r.out.find("omega" + std::to_string(i)) != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("catalog and construction commands") {
  Result list = run({"catalog", "list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("theta-knotted") != std::string::npos);

  Result dbl = run({"double", "omega1"});
  CHECK(dbl.code == 0);
  auto j = nlohmann::json::parse(dbl.out);
  CHECK(j["components"] == 4);
  CHECK(j["crossings"] == 0);

  Result assoc = run({"associated-link", "omega7", "--json"});
  CHECK(assoc.code == 0);
  auto a = nlohmann::json::parse(assoc.out);
  CHECK(a["writhe"] == 0);
  CHECK(a["components"] == 4);
  CHECK(a["crossings"] == 20);
}

TEST_CASE("bad usage") {
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"verify"}).code == 1);
}
