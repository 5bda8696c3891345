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

#include <algorithm>
#include <numeric>

namespace semimat {

namespace {

// Union-find over a handful of vertices.
class Components {
 public:
  explicit Components(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

void Matroid::check_size(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw LimitExceeded("ground set size " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxGroundSize));
  }
}

int Matroid::rank(Subset x) const {
  if (!is_subset(x, ground_)) {
    throw InvalidInput("subset " + subset_string(x) + " is not contained in the ground set");
  }
  return table_[x];
}

Matroid Matroid::from_rank_table(int n, const std::vector<int>& ranks) {
  check_size(n);
  if (ranks.size() != (std::size_t{1} << n)) {
    throw InvalidInput("rank table must have 2^" + std::to_string(n) + " entries");
  }
  std::vector<std::int8_t> table(ranks.size());
  for (std::size_t x = 0; x < ranks.size(); ++x) {
    if (ranks[x] < 0 || ranks[x] > n) throw InvalidInput("rank value out of range");
    table[x] = static_cast<std::int8_t>(ranks[x]);
  }
  Matroid m(full_set(n), std::move(table));
  if (auto v = m.find_axiom_violation()) {
    throw InvalidInput("rank table violates " + v->axiom + " at X=" +
                       subset_string(v->x) + ", Y=" + subset_string(v->y));
  }
  return m;
}

Matroid Matroid::uniform(int rank, int n) {
  check_size(n);
  if (rank < 0 || rank > n) throw InvalidInput("uniform matroid needs 0 <= r <= n");
  std::vector<std::int8_t> table(std::size_t{1} << n);
  for (std::size_t x = 0; x < table.size(); ++x) {
    table[x] = static_cast<std::int8_t>(std::min(popcount(static_cast<Subset>(x)), rank));
  }
  return Matroid(full_set(n), std::move(table));
}

Matroid Matroid::free(int n) { return uniform(n, n); }

Matroid Matroid::from_columns(const std::vector<Vector>& columns, const Field& field) {
  const int n = static_cast<int>(columns.size());
  check_size(n);
  const int dim = columns.empty() ? 0 : static_cast<int>(columns[0].size());
  for (const auto& c : columns) {
    if (static_cast<int>(c.size()) != dim) throw InvalidInput("columns differ in length");
  }
  std::vector<std::int8_t> table(std::size_t{1} << n);
  for (std::size_t x = 1; x < table.size(); ++x) {
    Matrix rows;
    for (int e : elements(static_cast<Subset>(x))) rows.push_back(columns[e]);
    table[x] = static_cast<std::int8_t>(matrix_rank(rows, dim, field));
  }
  return Matroid(full_set(n), std::move(table));
}

Matroid Matroid::from_graph(int vertex_count,
                            const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(edges.size());
  check_size(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw InvalidInput("edge endpoint out of range");
    }
  }
  std::vector<std::int8_t> table(std::size_t{1} << n);
  for (std::size_t x = 1; x < table.size(); ++x) {
    Components comp(vertex_count);
    int r = 0;
    for (int e : elements(static_cast<Subset>(x))) {
      if (comp.unite(edges[e].first, edges[e].second)) ++r;
    }
    table[x] = static_cast<std::int8_t>(r);
  }
  return Matroid(full_set(n), std::move(table));
}

Matroid Matroid::from_circuits(int n, const std::vector<Subset>& circuits) {
  check_size(n);
  const Subset ground = full_set(n);
  for (Subset c : circuits) {
    if (c == 0 || !is_subset(c, ground)) throw InvalidInput("circuit outside the ground set");
  }
  std::vector<std::int8_t> table(std::size_t{1} << n);
  for (std::size_t xi = 1; xi < table.size(); ++xi) {
    const Subset x = static_cast<Subset>(xi);
    const bool dependent = std::any_of(circuits.begin(), circuits.end(),
                                       [&](Subset c) { return is_subset(c, x); });
    if (!dependent) {
      table[x] = static_cast<std::int8_t>(popcount(x));
      continue;
    }
    int best = 0;
    for (int e : elements(x)) best = std::max<int>(best, table[x & ~bit(e)]);
    table[x] = static_cast<std::int8_t>(best);
  }
  Matroid m(ground, std::move(table));
  if (auto v = m.find_axiom_violation()) {
    throw InvalidInput("circuit family violates the circuit axioms (" + v->axiom + ")");
  }
  auto derived = m.circuits();
  auto expected = circuits;
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  if (derived != expected) {
    throw InvalidInput("circuit family is not a clutter satisfying circuit elimination");
  }
  return m;
}

Matroid Matroid::from_rank_function(Subset ground,
                                    const std::function<int(Subset)>& rank_of) {
  check_size(popcount(ground));
  if (width(ground) > kMaxGroundSize) throw LimitExceeded("ground labels exceed the bitmask cap");
  std::vector<std::int8_t> table(std::size_t{1} << width(ground), 0);
  for (Subset x = 0; x <= ground; ++x) {
    if (!is_subset(x, ground)) continue;
    const int r = rank_of(x);
    if (r < 0 || r > popcount(x)) throw InvalidInput("rank value out of range at " + subset_string(x));
    table[x] = static_cast<std::int8_t>(r);
  }
  Matroid m(ground, std::move(table));
  if (auto v = m.find_axiom_violation()) {
    throw InvalidInput("rank function violates " + v->axiom + " at X=" + subset_string(v->x) +
                       ", Y=" + subset_string(v->y));
  }
  return m;
}

Subset Matroid::closure(Subset x) const {
  const int r = rank(x);
  Subset cl = x;
  for (int e : elements(ground_ & ~x)) {
    if (table_[x | bit(e)] == r) cl |= bit(e);
  }
  return cl;
}

std::vector<Subset> Matroid::circuits() const {
  std::vector<Subset> out;
  for (Subset x = 1; x <= ground_; ++x) {
    if (!is_subset(x, ground_)) continue;
    if (table_[x] == popcount(x)) continue;
    bool minimal = true;
    for (int e : elements(x)) {
      const Subset y = x & ~bit(e);
      if (table_[y] != popcount(y)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<Subset> Matroid::flats() const {
  std::vector<Subset> out;
  for (Subset x = 0; x <= ground_; ++x) {
    if (is_subset(x, ground_) && closure(x) == x) out.push_back(x);
  }
  return out;
}

std::vector<Subset> Matroid::bases() const {
  std::vector<Subset> out;
  const int r = rank();
  for (Subset x = 0; x <= ground_; ++x) {
    if (is_subset(x, ground_) && popcount(x) == r && table_[x] == r) out.push_back(x);
  }
  return out;
}

Matroid Matroid::delete_set(Subset a) const {
  const Subset ground = ground_ & ~a;
  std::vector<std::int8_t> table(std::size_t{1} << width(ground), 0);
  for (Subset y = 0; y <= ground; ++y) {
    if (is_subset(y, ground)) table[y] = table_[y];
  }
  return Matroid(ground, std::move(table));
}

Matroid Matroid::contract(Subset x) const {
  if (!is_subset(x, ground_)) throw InvalidInput("contract: set outside the ground set");
  const Subset ground = ground_ & ~x;
  const int rx = table_[x];
  std::vector<std::int8_t> table(std::size_t{1} << width(ground), 0);
  for (Subset y = 0; y <= ground; ++y) {
    if (is_subset(y, ground)) table[y] = static_cast<std::int8_t>(table_[y | x] - rx);
  }
  return Matroid(ground, std::move(table));
}

std::optional<RankAxiomViolation> Matroid::find_axiom_violation() const {
  // Local form: r(0)=0, unit increase, and local submodularity together are
  // equivalent to the usual rank axioms.
  if (table_[0] != 0) return RankAxiomViolation{"R1", 0, 0};
  const auto elems = elements(ground_);
  for (Subset x = 0; x <= ground_; ++x) {
    if (!is_subset(x, ground_)) continue;
    for (int e : elems) {
      if (has(x, e)) continue;
      const int d = table_[x | bit(e)] - table_[x];
      if (d < 0) return RankAxiomViolation{"R2", x, x | bit(e)};
      if (d > 1) return RankAxiomViolation{"R1", x, x | bit(e)};
      for (int f : elems) {
        if (f <= e || has(x, f)) continue;
        if (table_[x | bit(e) | bit(f)] + table_[x] >
            table_[x | bit(e)] + table_[x | bit(f)]) {
          return RankAxiomViolation{"R3", x | bit(e), x | bit(f)};
        }
      }
    }
  }
  return std::nullopt;
}

FlatLattice flat_lattice(const Matroid& m) {
  FlatLattice out;
  out.flats = m.flats();
  std::stable_sort(out.flats.begin(), out.flats.end(), [&](Subset a, Subset b) {
    return m.rank(a) < m.rank(b);
  });
  const auto& f = out.flats;
  out.poset = FinitePoset::from_trusted_relation(
      f.size(), [&](std::size_t i, std::size_t j) { return is_subset(f[i], f[j]); });
  return out;
}

MatroidPolynomials matroid_polynomials(const Matroid& m) {
  if (m.ground_size() > kMaxEnumeratedGround) {
    throw LimitExceeded("polynomial sums are capped at 16 elements");
  }
  MatroidPolynomials out;
  const int r = m.rank();
  const Subset ground = m.ground();
  for (Subset x = 0; x <= ground; ++x) {
    if (!is_subset(x, ground)) continue;
    const int rx = m.rank(x);
    out.chi.add_term(r - rx, sign_power(popcount(x)));
    out.tutte += (BiPoly::t() - 1).pow(r - rx) * (BiPoly::s() - 1).pow(popcount(x) - rx);
  }
  return out;
}

}  // namespace semimat
