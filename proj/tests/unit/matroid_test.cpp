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

#include "semimat/matroid.hpp"

#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace semimat {
namespace {

oracle::Ranks all_ranks(const Matroid& m) {
  oracle::Ranks r;
  for (Subset x = 0; x <= m.ground(); ++x) {
    if (is_subset(x, m.ground())) r[x] = m.rank(x);
  }
  return r;
}

TEST(MatroidTest, UniformStructure) {
  const Matroid u = Matroid::uniform(2, 4);
  EXPECT_EQ(u.rank(), 2);
  EXPECT_EQ(u.circuits(), (std::vector<Subset>{7, 11, 13, 14}));
  EXPECT_EQ(u.flats().size(), 6u);
  EXPECT_EQ(u.bases().size(), 6u);
  EXPECT_EQ(u.closure(0b0011), 0b1111u);
  EXPECT_TRUE(u.is_flat(0b0001));
  EXPECT_FALSE(u.find_axiom_violation().has_value());
}

TEST(MatroidTest, U24PolynomialsMatchOracle) {
  const Matroid u = Matroid::uniform(2, 4);
  const oracle::Ranks ranks = all_ranks(u);
  // Oracle values, frozen below.
  EXPECT_EQ(oracle::characteristic(ranks), (oracle::Poly{{0, 3}, {1, -4}, {2, 1}}));
  EXPECT_EQ(oracle::tutte(ranks),
            (oracle::Poly2{{{2, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 2}, {{0, 2}, 1}}));
  const MatroidPolynomials p = matroid_polynomials(u);
  EXPECT_EQ(p.chi, UniPoly::from_descending({1, -4, 3}));
  const BiPoly t = BiPoly::t();
  const BiPoly s = BiPoly::s();
  EXPECT_EQ(p.tutte, t * t + 2 * t + 2 * s + s * s);
}

TEST(MatroidTest, MinorsOfUniform) {
  const Matroid u = Matroid::uniform(2, 4);
  const Matroid c = u.contract(0b0001);
  EXPECT_EQ(c.ground(), 0b1110u);
  for (Subset x = 0; x < 16; x += 2) EXPECT_EQ(c.rank(x), std::min(1, popcount(x)));
  const Matroid d = u.delete_set(0b0001);
  EXPECT_EQ(d.rank(), 2);
  EXPECT_EQ(d.circuits(), (std::vector<Subset>{14}));
  EXPECT_THROW(d.rank(0b0001), InvalidInput);
}

TEST(MatroidTest, Constructions) {
  // The triangle is U_{2,3}.
  EXPECT_EQ(Matroid::from_graph(3, {{0, 1}, {1, 2}, {0, 2}}), Matroid::uniform(2, 3));
  // A loop edge is a loop of the matroid.
  EXPECT_TRUE(Matroid::from_graph(2, {{0, 0}, {0, 1}}).is_loop(0));
  const Matroid cols = Matroid::from_columns(
      {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)},
       {Rational(2), Rational(2)}},
      Field::rationals());
  EXPECT_EQ(cols.circuits(), (std::vector<Subset>{0b0111, 0b1011, 0b1100}));
  // Over F_2 the columns (1,1) and (2,2) = (0,0) differ: the last is a loop.
  const Matroid f2 = Matroid::from_columns(
      {{Rational(1), Rational(1)}, {Rational(2), Rational(2)}}, Field::prime(2));
  EXPECT_TRUE(f2.is_loop(1));
  EXPECT_EQ(Matroid::from_circuits(4, {7, 11, 13, 14}), Matroid::uniform(2, 4));
  EXPECT_THROW(Matroid::from_circuits(3, {3, 1}), InvalidInput);
  EXPECT_EQ(Matroid::free(3).rank(), 3);
}

TEST(MatroidTest, RankTableValidation) {
  EXPECT_THROW(Matroid::from_rank_table(1, {0, 2}), InvalidInput);     // R1
  EXPECT_THROW(Matroid::from_rank_table(2, {0, 1, 1, 0}), InvalidInput);  // R2
  // r({0}) = r({1}) = r({0,1}) = 1 is fine; r(empty) = 1 is not.
  EXPECT_NO_THROW(Matroid::from_rank_table(2, {0, 1, 1, 1}));
  EXPECT_THROW(Matroid::from_rank_table(2, {1, 1, 1, 1}), InvalidInput);
  EXPECT_THROW(Matroid::uniform(3, 21), LimitExceeded);
}

TEST(MatroidTest, FlatLatticeOrdering) {
  const FlatLattice l = flat_lattice(Matroid::uniform(2, 3));
  ASSERT_EQ(l.flats.size(), 5u);
  EXPECT_EQ(l.flats.front(), 0u);
  EXPECT_EQ(l.flats.back(), 7u);
  EXPECT_TRUE(l.poset.leq(0, 4));
  EXPECT_FALSE(l.poset.leq(1, 2));
}

// Rank axioms and closure properties on random column matroids.
TEST(MatroidPropertyTest, AxiomsClosureAndPolynomials) {
  CorpusRng rng(5);
  for (int i = 0; i < 40; ++i) {
    const AssigningMatroid a = random_assigning_matroid(rng, 7);
    const Matroid& m = a.matroid();
    EXPECT_FALSE(m.find_axiom_violation().has_value());
    for (Subset x = 0; x <= m.ground(); ++x) {
      const Subset c = m.closure(x);
      EXPECT_TRUE(is_subset(x, c));
      EXPECT_EQ(m.closure(c), c);
      EXPECT_EQ(m.rank(c), m.rank(x));
    }
    for (Subset b : m.bases()) EXPECT_EQ(popcount(b), m.rank());
    const oracle::Ranks ranks = all_ranks(m);
    const MatroidPolynomials p = matroid_polynomials(m);
    EXPECT_EQ(p.chi, fixtures::to_uni(oracle::characteristic(ranks)));
    EXPECT_EQ(p.tutte, fixtures::to_bi(oracle::tutte(ranks)));
    // Deletion-contraction of T on the lowest non-loop, non-coloop element.
    for (int e : elements(m.ground())) {
      if (m.is_loop(e) || m.rank(m.ground() & ~bit(e)) < m.rank()) continue;
      EXPECT_EQ(p.tutte, matroid_polynomials(m.delete_set(bit(e))).tutte +
                             matroid_polynomials(m.contract(bit(e))).tutte);
      break;
    }
  }
}

}  // namespace
}  // namespace semimat
