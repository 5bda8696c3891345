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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/cli.hpp"

namespace {

using semimat::cli::Command;

struct VerbSpec {
  const char* name;
  const char* verb;  // canonical verb passed to run()
  const char* help;
  std::vector<const char*> options;
};

void add_verb(CLI::App& parent, const VerbSpec& spec, Command& chosen,
              std::map<std::string, std::string>& values, bool& no_check) {
  CLI::App* sub = parent.add_subcommand(spec.name, spec.help);
  if (std::string(spec.verb) != "corpus-gen") {
    sub->add_option("input", chosen.input_path, "JSON input file, '-' for standard input")
        ->default_val("-");
  }
  sub->add_flag("--no-check", no_check, "skip identity re-verification");
  for (const char* opt : spec.options) {
    sub->add_option(std::string("--") + opt, values[opt]);
  }
  const std::string verb = spec.verb;
  sub->callback([&chosen, verb] { chosen.verb = verb; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semimatroid, arrangement and assigning-graph computations with JSON I/O"};
  app.require_subcommand(1);
  Command chosen;
  std::map<std::string, std::string> values;
  bool no_check = false;

  const std::vector<VerbSpec> flat = {
      {"verify", "verify", "check the semimatroid axioms", {}},
      {"chi", "chi", "characteristic polynomial", {}},
      {"tutte", "tutte", "Tutte polynomial", {}},
      {"nbc", "nbc", "broken circuits and NBC counts", {"ordering"}},
      {"convolution", "convolution", "convolution formulas", {}},
      {"assign", "assign", "induced assigning matroid", {}},
      {"arr-chi", "arr-chi", "characteristic polynomial of an arrangement", {}},
      {"arr-tutte", "arr-tutte", "Tutte polynomial of an arrangement", {}},
      {"arr-classify", "arr-classify", "classify parallel translations", {}},
      {"arr-count", "arr-count", "count points over a finite field", {"q"}},
      {"graph-chromatic", "graph-chromatic", "chromatic polynomial of a gain graph", {}},
      {"arr-discriminantal", "arr-discriminantal", "circuit vectors and discriminantal arrangement", {}},
      {"graph-count", "graph-count", "count colorings over Z/q", {"q"}},
      {"graph-admissible", "graph-admissible", "admissible assigning of the gains", {}},
      {"corpus-gen", "corpus-gen", "generate fixture files", {"seed", "count", "out"}},
  };
  for (const auto& spec : flat) add_verb(app, spec, chosen, values, no_check);

  CLI::App* arr = app.add_subcommand("arr", "hyperplane arrangements");
  arr->require_subcommand(1);
  for (const VerbSpec& spec : std::vector<VerbSpec>{
           {"chi", "arr-chi", "characteristic polynomial", {}},
           {"tutte", "arr-tutte", "Tutte polynomial", {}},
           {"classify", "arr-classify", "classify parallel translations", {}},
           {"count-points", "arr-count", "count points over a finite field", {"q"}},
           {"discriminantal", "arr-discriminantal", "circuit vectors and discriminantal arrangement", {}},
       }) {
    add_verb(*arr, spec, chosen, values, no_check);
  }
  CLI::App* graph = app.add_subcommand("graph", "gain graphs");
  graph->require_subcommand(1);
  for (const VerbSpec& spec : std::vector<VerbSpec>{
           {"chromatic", "graph-chromatic", "chromatic polynomial", {}},
           {"count-colorings", "graph-count", "count colorings over Z/q", {"q"}},
           {"admissible", "graph-admissible", "admissible assigning of the gains", {}},
       }) {
    add_verb(*graph, spec, chosen, values, no_check);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return semimat::cli::kExitInputError;
  }

  for (const auto& [name, value] : values) {
    if (!value.empty()) chosen.options[name] = value;
  }
  if (no_check) chosen.options["no-check"] = "1";

  const semimat::cli::Result result = semimat::cli::run(chosen);
  std::cout << semimat::cli::render(result.output);
  if (result.output.contains("error")) {
    std::cerr << "error: " << result.output["error"]["message"].get<std::string>() << "\n";
  }
  return result.exit_code;
}
