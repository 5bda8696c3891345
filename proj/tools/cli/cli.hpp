// Copyright 2026 The Authors.
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

#ifndef SEMIMAT_TOOLS_CLI_HPP_
#define SEMIMAT_TOOLS_CLI_HPP_

#include <map>
#include <string>

#include "semimat/json_io.hpp"

namespace semimat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitLimit = 3;

// Verbs: verify, chi, tutte, nbc, convolution, assign, arr-chi, arr-tutte,
// arr-classify, arr-count, arr-discriminantal, graph-chromatic, graph-count,
// graph-admissible, corpus-gen.
struct Command {
  std::string verb;
  std::string input_path;  // "-" reads standard input
  std::map<std::string, std::string> options;
};

struct Result {
  int exit_code = kExitOk;
  Json output;
};

// Never throws; errors are reported in `output["error"]` with exit code 2 or 3.
Result run(const Command& command);
// Same, on an already loaded input document.
Result run_on(const Command& command, const std::string& input_text);

// Two-space indented, sorted keys, trailing newline.
std::string render(const Json& output);

}  // namespace semimat::cli

#endif  // SEMIMAT_TOOLS_CLI_HPP_
