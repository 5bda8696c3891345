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

#ifndef SEMIMAT_ASSIGNING_HPP_
#define SEMIMAT_ASSIGNING_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "semimat/matroid.hpp"
#include "semimat/numbers.hpp"
#include "semimat/polynomial.hpp"
#include "semimat/semimatroid.hpp"

namespace semimat {

// A 0/1 label per circuit, kept sorted by circuit bitmask.
class Assigning {
 public:
  Assigning() = default;
  explicit Assigning(std::vector<std::pair<Subset, int>> labels);

  // All circuits labelled `value`.
  static Assigning constant(const std::vector<Subset>& circuits, int value);

  // Throws InvalidInput for a circuit without a label.
  int label(Subset circuit) const;
  const std::vector<std::pair<Subset, int>>& all() const { return labels_; }
  std::vector<Subset> circuits() const;

  // Pointwise order on a shared circuit set.
  bool leq(const Assigning& other) const;

  friend bool operator==(const Assigning&, const Assigning&) = default;

 private:
  std::vector<std::pair<Subset, int>> labels_;
};

class AssigningMatroid {
 public:
  // Throws InvalidInput unless the labelled sets are exactly the circuits.
  AssigningMatroid(Matroid matroid, Assigning assigning);

  const Matroid& matroid() const { return matroid_; }
  const Assigning& assigning() const { return assigning_; }
  // Circuits labelled 0.
  std::vector<Subset> compatible_circuits() const;

  friend bool operator==(const AssigningMatroid&, const AssigningMatroid&) = default;

 private:
  Matroid matroid_;
  Assigning assigning_;
};

// Subsets all of whose circuits carry label 0, sorted by bitmask.
std::vector<Subset> compatible_family(const AssigningMatroid& a);

struct CompatiblePolynomials {
  UniPoly chi;
  BiPoly tutte;
};

CompatiblePolynomials compatible_polynomials(const AssigningMatroid& a);

// The compatible family with the matroid rank, as an unvalidated triple.
RankedFamily compatible_ranked_family(const AssigningMatroid& a);

struct SemimatroidVerdict {
  bool verdict = false;
  std::optional<AxiomCheck> failing_axiom;  // first failure among SR1..SR5
  AxiomReport report;
};

SemimatroidVerdict is_semimatroid(const AssigningMatroid& a);

// Throws InvalidInput when the compatible family is not a semimatroid.
Semimatroid to_semimatroid(const AssigningMatroid& a);

// (M_C, alpha_C): label 0 exactly on the circuits of M_C that are central.
AssigningMatroid induced_assigning(const Semimatroid& s);

}  // namespace semimat

#endif  // SEMIMAT_ASSIGNING_HPP_
