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

#ifndef SEMIMAT_MATROID_HPP_
#define SEMIMAT_MATROID_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semimat/linalg.hpp"
#include "semimat/numbers.hpp"
#include "semimat/polynomial.hpp"
#include "semimat/poset.hpp"

namespace semimat {

struct RankAxiomViolation {
  std::string axiom;  // "R1", "R2" or "R3"
  Subset x = 0;
  Subset y = 0;
};

// A matroid stored as a full rank table. Elements keep their labels under
// deletion and contraction; the ground set is a bitmask, not necessarily
// {0..n-1}.
class Matroid {
 public:
  Matroid() = default;

  // ranks[X] for every X in 0..2^n-1. Validates the rank axioms.
  static Matroid from_rank_table(int n, const std::vector<int>& ranks);
  static Matroid uniform(int rank, int n);
  static Matroid free(int n);
  // Vector matroid of the given columns over Q or F_p.
  static Matroid from_columns(const std::vector<Vector>& columns, const Field& field);
  // Cycle matroid: r(X) = n - c(X) on the spanning subgraph with edges X.
  // Vertices are 0-based.
  static Matroid from_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);
  // Matroid whose circuits are exactly the given sets. Throws InvalidInput if
  // the family violates the circuit axioms.
  static Matroid from_circuits(int n, const std::vector<Subset>& circuits);
  // Matroid on an arbitrary ground mask with r given by `rank_of`. Validates
  // the rank axioms.
  static Matroid from_rank_function(Subset ground, const std::function<int(Subset)>& rank_of);

  Subset ground() const { return ground_; }
  int ground_size() const { return popcount(ground_); }
  int rank() const { return rank(ground_); }
  int rank(Subset x) const;

  bool is_independent(Subset x) const { return rank(x) == popcount(x); }
  bool is_loop(int e) const { return rank(bit(e)) == 0; }
  Subset closure(Subset x) const;
  bool is_flat(Subset x) const { return closure(x) == x; }

  // Minimal dependent sets in increasing bitmask order.
  std::vector<Subset> circuits() const;
  // Closed sets in increasing bitmask order.
  std::vector<Subset> flats() const;
  std::vector<Subset> bases() const;

  Matroid delete_set(Subset a) const;
  Matroid restrict_to(Subset x) const { return delete_set(ground_ & ~x); }
  Matroid contract(Subset x) const;

  // First violated local rank axiom, if any.
  std::optional<RankAxiomViolation> find_axiom_violation() const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Matroid(Subset ground, std::vector<std::int8_t> table)
      : ground_(ground), table_(std::move(table)) {}
  static void check_size(int n);

  Subset ground_ = 0;
  std::vector<std::int8_t> table_{0};  // indexed by bitmask
};

struct FlatLattice {
  std::vector<Subset> flats;  // sorted by (rank, bitmask)
  FinitePoset poset;          // inclusion order on 
};

FlatLattice flat_lattice(const Matroid& m);

struct MatroidPolynomials {
  UniPoly chi;
  BiPoly tutte;
};

// Corank-nullity sums over all subsets. Ground set capped at 16.
MatroidPolynomials matroid_polynomials(const Matroid& m);

}  // namespace semimat

#endif  // SEMIMAT_MATROID_HPP_
