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

#ifndef SEMIMAT_POSET_HPP_
#define SEMIMAT_POSET_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "semimat/numbers.hpp"
#include "semimat/polynomial.hpp"

namespace semimat {

// A finite poset on elements 0..n-1 stored as a full relation matrix.
class FinitePoset {
 public:
  FinitePoset() = default;

  // Builds the poset from a predicate leq(x, y). Throws InvalidInput unless
  // the relation is reflexive, antisymmetric and transitive.
  static FinitePoset from_relation(std::size_t n,
                                   const std::function<bool(std::size_t, std::size_t)>& leq);
  // Same, skipping the O(n^3) axiom check; for relations known to be partial
  // orders (e.g. set inclusion).
  static FinitePoset from_trusted_relation(
      std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const { return n_; }
  bool leq(std::size_t x, std::size_t y) const { return index_[x * n_ + y] >= 0; }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

  // Elements ordered so that x < y implies x appears first.
  const std::vector<std::size_t>& linear_extension() const { return order_; }
  // Elements z >= x, in linear-extension order.
  const std::vector<std::size_t>& up_set(std::size_t x) const { return up_[x]; }

  // Dense slot of the comparable pair (x, y), or -1 when x is not <= y.
  std::int32_t pair_index(std::size_t x, std::size_t y) const {
    return index_[x * n_ + y];
  }
  std::size_t comparable_pair_count() const { return pairs_; }

 private:
  static FinitePoset build(std::size_t n, std::vector<char> rel, bool validate);

  std::size_t n_ = 0;
  std::size_t pairs_ = 0;
  std::vector<std::int32_t> index_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> up_;
};

template <class Ring>
struct RingTraits {
  static Ring zero() { return Ring(0); }
  static Ring one() { return Ring(1); }
};

// An element of the incidence algebra I(P, Ring): a value for every
// comparable pair x <= y. The function refers to its poset and must not
// outlive it.
template <class Ring>
class IncidenceFunction {
 public:
  explicit IncidenceFunction(const FinitePoset& poset)
      : poset_(&poset),
        values_(poset.comparable_pair_count(), RingTraits<Ring>::zero()) {}

  const FinitePoset& poset() const { return *poset_; }

  const Ring& at(std::size_t x, std::size_t y) const {
    return values_[slot(x, y)];
  }
  void set(std::size_t x, std::size_t y, Ring value) {
    values_[slot(x, y)] = std::move(value);
  }
  // Value at (x, y), or zero for incomparable pairs.
  Ring value_or_zero(std::size_t x, std::size_t y) const {
    const auto k = poset_->pair_index(x, y);
    return k < 0 ? RingTraits<Ring>::zero() : values_[k];
  }

  friend bool operator==(const IncidenceFunction& a, const IncidenceFunction& b) {
    return a.poset_ == b.poset_ && a.values_ == b.values_;
  }

 private:
  std::size_t slot(std::size_t x, std::size_t y) const {
    const auto k = poset_->pair_index(x, y);
    if (k < 0) throw InvalidInput("incidence function queried off a comparable pair");
    return static_cast<std::size_t>(k);
  }

  const FinitePoset* poset_;
  std::vector<Ring> values_;
};

// mu(x,x) = 1 and mu(x,y) = -sum_{x <= z < y} mu(x,z).
IncidenceFunction<BigInt> mobius_table(const FinitePoset& poset);

template <class Ring>
IncidenceFunction<Ring> zeta(const FinitePoset& poset) {
  IncidenceFunction<Ring> f(poset);
  for (std::size_t x = 0; x < poset.size(); ++x) {
    for (std::size_t y : poset.up_set(x)) f.set(x, y, RingTraits<Ring>::one());
  }
  return f;
}

// The multiplicative identity: 1 on the diagonal, 0 elsewhere.
template <class Ring>
IncidenceFunction<Ring> incidence_identity(const FinitePoset& poset) {
  IncidenceFunction<Ring> f(poset);
  for (std::size_t x = 0; x < poset.size(); ++x) f.set(x, x, RingTraits<Ring>::one());
  return f;
}

// delta(f): f(x) on the diagonal, 0 elsewhere.
template <class Ring>
IncidenceFunction<Ring> diagonal(const FinitePoset& poset, std::span<const Ring> f) {
  if (f.size() != poset.size()) throw InvalidInput("diagonal: function size mismatch");
  IncidenceFunction<Ring> out(poset);
  for (std::size_t x = 0; x < poset.size(); ++x) out.set(x, x, f[x]);
  return out;
}

template <class Ring>
IncidenceFunction<Ring> lift(const IncidenceFunction<BigInt>& f) {
  const FinitePoset& poset = f.poset();
  IncidenceFunction<Ring> out(poset);
  for (std::size_t x = 0; x < poset.size(); ++x) {
    for (std::size_t y : poset.up_set(x)) out.set(x, y, Ring(f.at(x, y)));
  }
  return out;
}

// (f * g)(x, y) = sum_{x <= z <= y} f(x, z) g(z, y).
template <class Ring>
IncidenceFunction<Ring> convolve(const IncidenceFunction<Ring>& f,
                                 const IncidenceFunction<Ring>& g,
                                 const FinitePoset& poset) {
  if (&f.poset() != &poset || &g.poset() != &poset) {
    throw InvalidInput("convolve: operands belong to a different poset");
  }
  IncidenceFunction<Ring> out(poset);
  for (std::size_t x = 0; x < poset.size(); ++x) {
    for (std::size_t y : poset.up_set(x)) {
      Ring acc = RingTraits<Ring>::zero();
      for (std::size_t z : poset.up_set(x)) {
        if (poset.leq(z, y)) acc += f.at(x, z) * g.at(z, y);
      }
      out.set(x, y, std::move(acc));
    }
  }
  return out;
}

// mu * delta(f) * zeta.
template <class Ring>
IncidenceFunction<Ring> mobius_conjugation(std::span<const Ring> f,
                                           const FinitePoset& poset) {
  const auto mu = lift<Ring>(mobius_table(poset));
  const auto left = convolve(mu, diagonal(poset, f), poset);
  return convolve(left, zeta<Ring>(poset), poset);
}

}  // namespace semimat

#endif  // SEMIMAT_POSET_HPP_
