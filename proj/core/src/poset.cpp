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

#include "semimat/poset.hpp"

#include <algorithm>
#include <string>

namespace semimat {

FinitePoset FinitePoset::from_relation(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
  std::vector<char> rel(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) rel[x * n + y] = leq(x, y) ? 1 : 0;
  }
  return build(n, std::move(rel), true);
}

FinitePoset FinitePoset::from_trusted_relation(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
  std::vector<char> rel(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) rel[x * n + y] = leq(x, y) ? 1 : 0;
  }
  return build(n, std::move(rel), false);
}

FinitePoset FinitePoset::build(std::size_t n, std::vector<char> rel, bool validate) {
  auto r = [&](std::size_t x, std::size_t y) { return rel[x * n + y] != 0; };
  for (std::size_t x = 0; x < n && validate; ++x) {
    if (!r(x, x)) throw InvalidInput("poset relation is not reflexive at " + std::to_string(x));
    for (std::size_t y = x + 1; y < n; ++y) {
      if (r(x, y) && r(y, x)) {
        throw InvalidInput("poset relation is not antisymmetric at (" +
                           std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }
  for (std::size_t x = 0; x < n && validate; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!r(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (r(y, z) && !r(x, z)) {
          throw InvalidInput("poset relation is not transitive");
        }
      }
    }
  }

  FinitePoset p;
  p.n_ = n;
  // Sorting by the number of elements below gives a linear extension.
  std::vector<std::size_t> below(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) below[y] += r(x, y) ? 1 : 0;
  }
  p.order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.order_[i] = i;
  std::stable_sort(p.order_.begin(), p.order_.end(),
                   [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });

  p.index_.assign(n * n, -1);
  p.up_.resize(n);
  std::int32_t next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y : p.order_) {
      if (r(x, y)) {
        p.index_[x * n + y] = next++;
        p.up_[x].push_back(y);
      }
    }
  }
  p.pairs_ = static_cast<std::size_t>(next);
  return p;
}

IncidenceFunction<BigInt> mobius_table(const FinitePoset& poset) {
  IncidenceFunction<BigInt> mu(poset);
  for (std::size_t x = 0; x < poset.size(); ++x) {
    const auto& up = poset.up_set(x);
    // up is in linear-extension order, so every z < y is already filled.
    for (std::size_t y : up) {
      if (y == x) {
        mu.set(x, x, 1);
        continue;
      }
      BigInt acc = 0;
      for (std::size_t z : up) {
        if (z != y && poset.leq(z, y)) acc += mu.at(x, z);
      }
      mu.set(x, y, -acc);
    }
  }
  return mu;
}

}  // namespace semimat
