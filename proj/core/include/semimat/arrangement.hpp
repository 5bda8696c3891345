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

#ifndef SEMIMAT_ARRANGEMENT_HPP_
#define SEMIMAT_ARRANGEMENT_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "semimat/assigning.hpp"
#include "semimat/linalg.hpp"
#include "semimat/matroid.hpp"
#include "semimat/numbers.hpp"
#include "semimat/polynomial.hpp"
#include "semimat/poset.hpp"
#include "semimat/semimatroid.hpp"

namespace semimat {

// normal . x = offset. A zero normal is allowed: it is the whole space when
// the offset is 0 and empty otherwise.
struct Hyperplane {
  Vector normal;
  Rational offset;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

class Arrangement {
 public:
  // Entries are normalized into `field`. Throws InvalidInput on a normal of
  // the wrong length or more than kMaxGroundSize hyperplanes.
  Arrangement(Field field, int dim, std::vector<Hyperplane> hyperplanes);

  const Field& field() const { return field_; }
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(hyperplanes_.size()); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](int e) const { return hyperplanes_[e]; }
  bool is_central() const;
  std::vector<Vector> normals() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  Field field_;
  int dim_;
  std::vector<Hyperplane> hyperplanes_;
};

// Dimension of the span of the normals.
int arrangement_rank(const Arrangement& a);

// Central sets X (the hyperplanes in X meet) with rank n - dim(meet),
// enumerated over all subsets. Capped at 16 hyperplanes.
RankedFamily central_family(const Arrangement& a);

Semimatroid semimatroid_of(const Arrangement& a);

// The vector matroid of the normals.
Matroid normal_matroid(const Arrangement& a);

struct ArrangementPolynomials {
  UniPoly chi;                       // sum over central sets
  std::optional<UniPoly> chi_mobius;  // sum over the intersection poset; absent with a loop
  BiPoly tutte;
};

// The empty arrangement in dimension n has chi = t^n and T = 1.
ArrangementPolynomials arrangement_polynomials(const Arrangement& a);

// Nonempty intersections of subfamilies, ordered by reverse inclusion.
struct IntersectionLattice {
  std::vector<Matrix> keys;        // reduced augmented system of each flat
  std::vector<int> dims;
  std::vector<Subset> containing;  // hyperplanes that contain the flat
  FinitePoset poset;               // index 0 is the ambient space
};

IntersectionLattice intersection_lattice(const Arrangement& a);

// Hyperplanes indexed by `x`, in increasing index order.
Arrangement subarrangement(const Arrangement& a, Subset x);

struct LocalizationRestriction {
  AffineChart chart;           // coordinates on the flat
  Subset localization = 0;     // hyperplanes containing the flat
  Arrangement localized;       // those hyperplanes, in the ambient space
  Arrangement restricted;      // nonempty traces of every hyperplane, in chart coordinates
  std::vector<int> trace_source;  // original index of each trace
  bool degenerate = false;     // some trace is the whole flat
};

// `flat` must be a flat of semimatroid_of(a); the geometric flat is the
// intersection of its hyperplanes.
LocalizationRestriction localization_restriction(const Arrangement& a, Subset flat);

// Traces of the hyperplanes outside the central set `x` on the intersection
// of `x`, in chart coordinates and in increasing index order. Empty traces
// are kept as 0 = c with c != 0.
Arrangement trace_arrangement(const Arrangement& a, Subset x);

struct HcfReport {
  BiPoly lhs;
  BiPoly rhs_central;
  BiPoly rhs_flats;
};

// Both Tutte convolution sums for an arrangement.
HcfReport hcf(const Arrangement& a);

// Minimal nonempty C whose hyperplanes meet and for which dropping any one
// member leaves the intersection unchanged.
std::vector<Subset> affine_circuits(const Arrangement& a);
// Circuits of the normal matroid whose augmented rows (normal, offset) are
// dependent.
std::vector<Subset> affine_circuits_by_augmented_rank(const Arrangement& a);

struct CircuitVector {
  Subset circuit = 0;
  Vector coefficients;  // indexed by hyperplane, first nonzero entry 1
};

// Throws InvalidInput unless every offset is zero.
std::vector<CircuitVector> circuit_vectors(const Arrangement& a_o);

// One hyperplane c.x = 0 per circuit vector, duplicates collapsed. Throws
// LimitExceeded beyond kMaxGroundSize hyperplanes.
Arrangement discriminantal(const Arrangement& a_o);

// Same normals, offsets replaced by `offsets`.
Arrangement translate(const Arrangement& a_o, const Vector& offsets);

enum class AssigningRoute { kAffineCircuits, kCircuitVectors };

// Label 0 on circuit C of the normal matroid exactly when C is an affine
// circuit of the translation (equivalently c_C . offsets = 0).
Assigning assigning_of_translation(const Arrangement& a_o, const Vector& offsets,
                                   AssigningRoute route = AssigningRoute::kAffineCircuits);

// A point on every hyperplane of `delta` in `flat` and on no other. Tries
// parameters (1, B, B^2, ...) on a chart of the flat for B = 2, 3, 4, ...;
// the zero vector when delta has no hyperplanes.
Vector representative_point(const Arrangement& delta, Subset flat);

struct TranslationClass {
  Subset flat = 0;  // flat of the discriminantal arrangement
  Vector representative;
  Semimatroid semimatroid;
  Assigning assigning;
};

// One class per flat of the discriminantal arrangement. Rationals only.
std::vector<TranslationClass> classify_translations(const Arrangement& a_o);

// The flat of delta whose stratum contains `point`: the hyperplanes it lies on.
Subset stratum_of(const Arrangement& delta, const Vector& point);

inline constexpr std::int64_t kPointBudget = 10'000'000;

// Points of F_p^n on no hyperplane. Throws LimitExceeded when p^n exceeds
// kPointBudget and InvalidInput over Q.
BigInt count_points_finite_field(const Arrangement& a);

// Reduces a rational arrangement into F_p. Throws InvalidInput when p divides
// a denominator.
Arrangement reduce_mod(const Arrangement& a, long p);

}  // namespace semimat

#endif  // SEMIMAT_ARRANGEMENT_HPP_
