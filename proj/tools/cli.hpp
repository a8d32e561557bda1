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

#ifndef SGPOLY_TOOLS_CLI_HPP
#define SGPOLY_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sgpoly::cli {

// Exit codes: 0 success, 1 load/validation failure, 2 crossing cap
// exceeded, 3 identity or table mismatch, 4 graph-kind mismatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgpoly::cli

#endif  // SGPOLY_TOOLS_CLI_HPP
