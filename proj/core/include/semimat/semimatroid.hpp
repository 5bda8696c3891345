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

#ifndef SEMIMAT_SEMIMATROID_HPP_
#define SEMIMAT_SEMIMATROID_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semimat/matroid.hpp"
#include "semimat/numbers.hpp"
#include "semimat/polynomial.hpp"
#include "semimat/poset.hpp"

namespace semimat {

// Unvalidated input triple: a ground set, a family of subsets and a rank
// assignment.
struct RankedFamily {
  Subset ground = 0;
  std::vector<Subset> sets;
  std::map<Subset, int> rank;
};

enum class Axiom { kSimplicial, kRanksConsistent, kSR1, kSR2, kSR3, kSR4, kSR5 };

std::string axiom_name(Axiom a);

struct AxiomCheck {
  Axiom axiom;
  bool passed = true;
  // Witness pair for a failure. For single-set axioms y == x.
  Subset x = 0;
  Subset y = 0;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;  // one per Axiom, in enum order

  bool passed() const;
  // First failing check in enum order.
  std::optional<AxiomCheck> first_failure() const;
  // First failing check among SR1..SR5.
  std::optional<AxiomCheck> first_sr_failure() const;
};

// Checks every axiom exhaustively over pairs of sets. The pair scan visits X
// in decreasing and Y in increasing bitmask order, so witnesses are stable.
AxiomReport verify_axioms(const RankedFamily& family);

class Semimatroid {
 public:
  Semimatroid() : table_{0}, central_{0} {}

  // Throws InvalidInput with the first failing axiom.
  static Semimatroid create(const RankedFamily& family);
  // Skips the O(|C|^2) axiom scan; only checks that ranks sit on a simplicial
  // complex. For families that are semimatroids by construction.
  static Semimatroid create_unchecked(const RankedFamily& family);
  static Semimatroid from_matroid(const Matroid& m);
  // Central sets {X subset of E-p : p not in cl_N(X)} with the rank of N.
  static Semimatroid from_pointed_matroid(const Matroid& n, int p);

  Subset ground() const { return ground_; }
  int ground_size() const { return popcount(ground_); }
  // Rank of the semimatroid: the common rank of all maximal central sets.
  int rank() const { return rank_; }
  bool is_central(Subset x) const {
    return is_subset(x, ground_) && table_[x] >= 0;
  }
  // Throws InvalidInput if x is not central.
  int rank(Subset x) const;
  // Sorted by bitmask.
  const std::vector<Subset>& central_sets() const { return central_; }
  RankedFamily family() const;

  // Throws InvalidInput if x is not central.
  Subset closure(Subset x) const;
  bool is_flat(Subset x) const { return is_central(x) && closure(x) == x; }
  std::vector<Subset> flats() const;

  bool is_loop(int e) const { return is_central(bit(e)) && table_[bit(e)] == 0; }
  bool has_loop() const;
  // Contained in every basis.
  bool is_bridge(int e) const;
  bool is_independent(Subset x) const { return is_central(x) && table_[x] == popcount(x); }
  // Inclusion-maximal independent sets, sorted.
  std::vector<Subset> bases() const;
  // Inclusion-minimal dependent central sets, sorted.
  std::vector<Subset> circuits() const;

  // Keeps the central sets inside x; x may be any subset of the ground set.
  Semimatroid restrict_to(Subset x) const;
  Semimatroid delete_set(Subset a) const { return restrict_to(ground_ & ~a); }
  // Requires x central.
  Semimatroid contract(Subset x) const;

  friend bool operator==(const Semimatroid& a, const Semimatroid& b) {
    return a.ground_ == b.ground_ && a.central_ == b.central_ && a.table_ == b.table_;
  }

 private:
  // Trusted constructor: table entries are -1 off the family.
  Semimatroid(Subset ground, std::vector<std::int8_t> table);

  Subset ground_ = 0;
  int rank_ = 0;
  std::vector<std::int8_t> table_;  // rank, or -1 when not central
  std::vector<Subset> central_;
};

// The flats L(C) ordered by inclusion, optionally with an artificial top.
class SemiFlatSemilattice {
 public:
  explicit SemiFlatSemilattice(const Semimatroid& s);

  // Sorted by (rank, bitmask); the bottom cl(empty) comes first.
  const std::vector<Subset>& flats() const { return flats_; }
  const std::vector<int>& ranks() const { return ranks_; }
  std::size_t index_of(Subset flat) const;
  // With `augmented` the extra element flats().size() lies above all flats.
  const FinitePoset& poset(bool augmented) const {
    return augmented ? augmented_ : plain_;
  }

 private:
  std::vector<Subset> flats_;
  std::vector<int> ranks_;
  FinitePoset plain_;
  FinitePoset augmented_;
};

enum class TutteRoute { kDefinition, kDeletionContraction };
enum class CharRoute { kDefinition, kMobius, kDeletionContraction };

BiPoly tutte(const Semimatroid& s, TutteRoute route = TutteRoute::kDefinition);
// The Mobius route requires a loopless semimatroid.
UniPoly characteristic(const Semimatroid& s, CharRoute route = CharRoute::kDefinition);

// mu(X, Y) on L(C) by the alternating sum over central Z with cl(Z) = Y.
BigInt mobius_closed_form(const Semimatroid& s, Subset x, Subset y);
// mu(X, Y) by the recursive definition on L(C).
BigInt mobius_recursive(const Semimatroid& s, Subset x, Subset y);

struct BrokenCircuitContext {
  std::vector<int> ordering;  // ordering[0] is the minimal element
  std::vector<Subset> broken_circuits;
  WhitneySeq nbc_counts;
};

// `ordering` must list each ground element once.
BrokenCircuitContext broken_circuit_analysis(const Semimatroid& s,
                                             const std::vector<int>& ordering);

// r(X) = max rank of a central subset of X.
Matroid rank_extension_matroid(const Semimatroid& s);

}  // namespace semimat

#endif  // SEMIMAT_SEMIMATROID_HPP_
