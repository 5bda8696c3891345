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

#include <gtest/gtest.h>

#include <bit>

namespace semimat {
namespace {

FinitePoset chain(std::size_t n) {
  return FinitePoset::from_relation(n, [](std::size_t x, std::size_t y) { return x <= y; });
}

FinitePoset boolean_lattice(int k) {
  return FinitePoset::from_relation(std::size_t{1} << k, [](std::size_t x, std::size_t y) {
    return (x & ~y) == 0;
  });
}

TEST(FinitePosetTest, RejectsNonOrders) {
  EXPECT_THROW(FinitePoset::from_relation(2, [](std::size_t, std::size_t) { return true; }),
               InvalidInput);
  EXPECT_THROW(FinitePoset::from_relation(2, [](std::size_t, std::size_t) { return false; }),
               InvalidInput);
  // 0 <= 1 <= 2 without 0 <= 2.
  EXPECT_THROW(FinitePoset::from_relation(3,
                                          [](std::size_t x, std::size_t y) {
                                            return x == y || (x == 0 && y == 1) ||
                                                   (x == 1 && y == 2);
                                          }),
               InvalidInput);
}

TEST(FinitePosetTest, LinearExtensionRespectsOrder) {
  const FinitePoset p = boolean_lattice(3);
  const auto& order = p.linear_extension();
  std::vector<std::size_t> position(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p.less(x, y)) EXPECT_LT(position[x], position[y]);
    }
  }
  EXPECT_EQ(p.comparable_pair_count(), 27u);  // 3^3
}

TEST(MobiusTest, ChainAndBooleanLattice) {
  const FinitePoset c = chain(4);
  const auto mu = mobius_table(c);
  EXPECT_EQ(mu.at(0, 0), 1);
  EXPECT_EQ(mu.at(0, 1), -1);
  EXPECT_EQ(mu.at(0, 2), 0);
  EXPECT_EQ(mu.at(1, 3), 0);

  const FinitePoset b = boolean_lattice(3);
  const auto mub = mobius_table(b);
  for (std::size_t x = 0; x < b.size(); ++x) {
    for (std::size_t y : b.up_set(x)) {
      EXPECT_EQ(mub.at(x, y), std::popcount(y & ~x) % 2 == 0 ? 1 : -1);
    }
  }
}

TEST(IncidenceAlgebraTest, MobiusInvertsZeta) {
  const FinitePoset b = boolean_lattice(3);
  const auto product = convolve(lift<BigInt>(mobius_table(b)), zeta<BigInt>(b), b);
  EXPECT_TRUE(product == incidence_identity<BigInt>(b));
  EXPECT_THROW(zeta<BigInt>(b).at(1, 0), InvalidInput);
  EXPECT_EQ(zeta<BigInt>(b).value_or_zero(1, 2), 0);
}

TEST(IncidenceAlgebraTest, ConjugationIsMultiplicative) {
  const FinitePoset p = FinitePoset::from_relation(4, [](std::size_t x, std::size_t y) {
    // Bottom 0, atoms 1 and 2, top 3.
    return x == y || x == 0 || y == 3;
  });
  const UniPoly t = UniPoly::variable();
  const std::vector<UniPoly> f = {t, t + 1, 2 * t, UniPoly(3)};
  const std::vector<UniPoly> g = {t * t, UniPoly(-1), t - 2, t};
  std::vector<UniPoly> fg;
  for (std::size_t i = 0; i < f.size(); ++i) fg.push_back(f[i] * g[i]);
  const auto lhs = mobius_conjugation<UniPoly>(fg, p);
  const auto rhs = convolve(mobius_conjugation<UniPoly>(f, p), mobius_conjugation<UniPoly>(g, p), p);
  EXPECT_TRUE(lhs == rhs);
  // Diagonal entries are f itself.
  EXPECT_EQ(mobius_conjugation<UniPoly>(f, p).at(1, 1), t + 1);
}

TEST(IncidenceAlgebraTest, DiagonalSizeMismatch) {
  const FinitePoset c = chain(2);
  const std::vector<BigInt> f = {1};
  EXPECT_THROW(diagonal<BigInt>(c, f), InvalidInput);
}

}  // namespace
}  // namespace semimat
