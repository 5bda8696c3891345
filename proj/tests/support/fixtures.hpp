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

#ifndef SEMIMAT_TESTS_SUPPORT_FIXTURES_HPP_
#define SEMIMAT_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "semimat/arrangement.hpp"
#include "semimat/assigning.hpp"
#include "semimat/corpus.hpp"
#include "semimat/graph.hpp"
#include "semimat/json_io.hpp"
#include "semimat/semimatroid.hpp"
#include "support/oracles.hpp"

namespace fixtures {

using namespace semimat;

struct NamedSemimatroid {
  std::string name;
  Semimatroid s;
};

// At least 200 semimatroids on at most 7 elements: arrangement, matroid,
// pointed-matroid, graphic and assigning-matroid sources, plus a few with
// loops. Deterministic.
const std::vector<NamedSemimatroid>& semimatroid_corpus();

// Rational arrangements with integer coefficients, dim <= 4, size <= 6.
std::vector<Arrangement> arrangements(int count, std::uint64_t seed);
std::vector<GraphInput> graphs(int count, std::uint64_t seed);
// (N, p) with p not a loop of N.
std::vector<std::pair<Matroid, int>> pointed_matroids(int count, std::uint64_t seed);

// U_{2,4} with alpha(C_i) = 0 exactly for the i in `zeros` (1-based), where
// C_i = E - e_i.
AssigningMatroid table1_row(const std::vector<int>& zeros);
Subset u24_circuit(int i);

// Fisher-Yates with `rng() % k` draws.
std::vector<int> random_ordering(Subset ground, CorpusRng& rng);

// Conversions to oracle inputs and back.
oracle::Ranks ranks_of(const Semimatroid& s);
oracle::Ranks ranks_of(const RankedFamily& f);
oracle::IntArrangement int_arrangement(const Arrangement& a);
std::vector<std::int64_t> int_gains(const GainVector& gains);
UniPoly to_uni(const oracle::Poly& p);
BiPoly to_bi(const oracle::Poly2& p);

}  // namespace fixtures

#endif  // SEMIMAT_TESTS_SUPPORT_FIXTURES_HPP_
