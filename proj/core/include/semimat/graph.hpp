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

#ifndef SEMIMAT_GRAPH_HPP_
#define SEMIMAT_GRAPH_HPP_

#include <string>
#include <utility>
#include <vector>

#include "semimat/arrangement.hpp"
#include "semimat/assigning.hpp"
#include "semimat/linalg.hpp"
#include "semimat/matroid.hpp"
#include "semimat/numbers.hpp"
#include "semimat/polynomial.hpp"

namespace semimat {

// Undirected multigraph on vertices 0..n-1. Loops and parallel edges are
// allowed.
struct MultiGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  // Throws InvalidInput on an endpoint out of range or too many edges.
  void validate() const;
};

// (tail, head) per edge.
using Orientation = std::vector<std::pair<int, int>>;
// One field element per edge.
using GainVector = Vector;

// Throws InvalidInput unless each arc joins the endpoints of its edge.
void check_orientation(const MultiGraph& g, const Orientation& d);

// Connected components of the spanning subgraph with edge set x.
int components(const MultiGraph& g, Subset x);

// Edge sets of connected 2-regular subgraphs, sorted. Capped at 16 edges.
std::vector<Subset> cycles(const MultiGraph& g);

Matroid cycle_matroid(const MultiGraph& g);

struct AssigningGraph {
  // Throws InvalidInput unless `labels` labels exactly the cycles of g.
  AssigningGraph(MultiGraph graph, Assigning labels);

  MultiGraph graph;
  Assigning labels;
};

AssigningMatroid lift_assigning(const AssigningGraph& g);

// Sum over compatible spanning subgraphs H of (-1)^{|E(H)|} t^{c(H)}.
UniPoly compatible_chromatic(const AssigningGraph& g);

struct GraphicArrangements {
  Arrangement graphic;       // x_head - x_tail = 0
  Arrangement affinographic; // x_head - x_tail = a_e
};

GraphicArrangements graphic_arrangements(const MultiGraph& g, const Orientation& d,
                                         const GainVector& gains,
                                         const Field& field = Field::rationals());

enum class AdmissibleRoute { kAffineCircuits, kGainSums };

// Signed gain sum around a cycle: +a_e along the arc, -a_e against it. The
// walk starts at the cycle's lowest vertex and heads to its lowest neighbour.
Rational cycle_gain_sum(const MultiGraph& g, const Orientation& d, const GainVector& gains,
                        Subset cycle, const Field& field = Field::rationals());

AssigningGraph admissible_assigning(const MultiGraph& g, const Orientation& d,
                                    const GainVector& gains,
                                    AdmissibleRoute route = AdmissibleRoute::kAffineCircuits,
                                    const Field& field = Field::rationals());

struct ColoringCount {
  BigInt count;
  // Reductions mod q that change an edge gain or a cycle label.
  std::vector<std::string> warnings;
};

// Colorings c: V -> F_q with c(head) - c(tail) != a_e on every arc. Rational
// gains are reduced mod q. Throws LimitExceeded when q^n exceeds the budget.
ColoringCount count_colorings(const MultiGraph& g, const Orientation& d,
                              const GainVector& gains, long q);

}  // namespace semimat

#endif  // SEMIMAT_GRAPH_HPP_
