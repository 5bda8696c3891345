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

#ifndef SEMIMAT_CORPUS_HPP_
#define SEMIMAT_CORPUS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "semimat/arrangement.hpp"
#include "semimat/assigning.hpp"
#include "semimat/json_io.hpp"

namespace semimat {

// Draws use `rng() % k` rather than std distributions so that output is
// identical across standard library implementations.
using CorpusRng = std::mt19937_64;

// Rational arrangement in dimension 1..4 with 1..6 hyperplanes and small
// integer coefficients; normals are nonzero.
Arrangement random_arrangement(CorpusRng& rng, int max_dim = 4, int max_size = 6);
// Multigraph on 1..5 vertices with 1..7 edges, a random orientation and small
// integer gains. Loops are not generated.
GraphInput random_graph(CorpusRng& rng, int max_vertices = 5, int max_edges = 7);
// Column matroid on 1..6 elements with a random 0/1 label per circuit.
AssigningMatroid random_assigning_matroid(CorpusRng& rng, int max_size = 6);

struct CorpusItem {
  std::string kind;  // "arrangement", "graph" or "assigning"
  std::string name;  // file stem, e.g. "arrangement-0003"
  Json json;
};

// Cycles through the three kinds; identical output for identical arguments.
std::vector<CorpusItem> corpus_gen(std::uint64_t seed, int count);

}  // namespace semimat

#endif  // SEMIMAT_CORPUS_HPP_
