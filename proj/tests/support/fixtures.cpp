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

#include "support/fixtures.hpp"

#include <stdexcept>

namespace fixtures {

namespace {

Matroid random_column_matroid(CorpusRng& rng, int n, int rows) {
  std::vector<Vector> cols;
  for (int e = 0; e < n; ++e) {
    Vector c;
    for (int i = 0; i < rows; ++i) c.emplace_back(static_cast<int>(rng() % 3) - 1);
    cols.push_back(std::move(c));
  }
  return Matroid::from_columns(cols, Field::rationals());
}

std::vector<NamedSemimatroid> build_corpus() {
  std::vector<NamedSemimatroid> out;
  CorpusRng rng(20260101);
  auto add = [&](std::string kind, Semimatroid s) {
    out.push_back({kind + "-" + std::to_string(out.size()), std::move(s)});
  };

  for (int i = 0; i < 80; ++i) add("arrangement", semimatroid_of(random_arrangement(rng, 3, 7)));
  for (int i = 0; i < 30; ++i) {
    const int n = 1 + static_cast<int>(rng() % 7);
    add("matroid", Semimatroid::from_matroid(random_column_matroid(rng, n, 1 + rng() % 3)));
  }
  for (int r = 0; r <= 3; ++r) {
    for (int n = r; n <= 5; ++n) add("uniform", Semimatroid::from_matroid(Matroid::uniform(r, n)));
  }
  for (const auto& [n, p] : pointed_matroids(30, 77)) {
    add("pointed", Semimatroid::from_pointed_matroid(n, p));
  }
  for (int i = 0; i < 25; ++i) {
    const GraphInput g = random_graph(rng, 5, 7);
    add("graph", semimatroid_of(graphic_arrangements(g.graph, g.orientation, g.gains).affinographic));
  }
  int assigned = 0;
  while (assigned < 30) {
    const AssigningMatroid a = random_assigning_matroid(rng, 7);
    if (!is_semimatroid(a).verdict) continue;
    add("assigning", to_semimatroid(a));
    ++assigned;
  }
  for (const auto& zeros : std::vector<std::vector<int>>{{}, {1}, {2}, {3}, {4}, {1, 2, 3, 4}}) {
    add("table1", to_semimatroid(table1_row(zeros)));
  }
  // Loops: a zero normal with zero offset.
  for (int i = 0; i < 6; ++i) {
    Arrangement base = random_arrangement(rng, 2, 5);
    std::vector<Hyperplane> hs = base.hyperplanes();
    hs.push_back({Vector(base.dim(), Rational(0)), Rational(0)});
    add("loopy", semimatroid_of(Arrangement(Field::rationals(), base.dim(), hs)));
  }
  return out;
}

}  // namespace

const std::vector<NamedSemimatroid>& semimatroid_corpus() {
  static const std::vector<NamedSemimatroid> corpus = build_corpus();
  return corpus;
}

std::vector<Arrangement> arrangements(int count, std::uint64_t seed) {
  CorpusRng rng(seed);
  std::vector<Arrangement> out;
  for (int i = 0; i < count; ++i) out.push_back(random_arrangement(rng));
  return out;
}

std::vector<GraphInput> graphs(int count, std::uint64_t seed) {
  CorpusRng rng(seed);
  std::vector<GraphInput> out;
  for (int i = 0; i < count; ++i) out.push_back(random_graph(rng));
  return out;
}

std::vector<std::pair<Matroid, int>> pointed_matroids(int count, std::uint64_t seed) {
  CorpusRng rng(seed);
  std::vector<std::pair<Matroid, int>> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = 2 + static_cast<int>(rng() % 6);
    Matroid m = random_column_matroid(rng, n, 1 + rng() % 3);
    const int p = static_cast<int>(rng() % n);
    if (m.is_loop(p)) continue;
    out.emplace_back(std::move(m), p);
  }
  return out;
}

Subset u24_circuit(int i) { return full_set(4) & ~bit(i - 1); }

AssigningMatroid table1_row(const std::vector<int>& zeros) {
  std::vector<std::pair<Subset, int>> labels;
  for (int i = 1; i <= 4; ++i) {
    const bool zero = std::find(zeros.begin(), zeros.end(), i) != zeros.end();
    labels.emplace_back(u24_circuit(i), zero ? 0 : 1);
  }
  return AssigningMatroid(Matroid::uniform(2, 4), Assigning(labels));
}

std::vector<int> random_ordering(Subset ground, CorpusRng& rng) {
  std::vector<int> order = elements(ground);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng() % i]);
  }
  return order;
}

oracle::Ranks ranks_of(const Semimatroid& s) {
  oracle::Ranks r;
  for (Subset x : s.central_sets()) r[x] = s.rank(x);
  return r;
}

oracle::Ranks ranks_of(const RankedFamily& f) {
  oracle::Ranks r;
  for (Subset x : f.sets) r[x] = f.rank.at(x);
  return r;
}

namespace {

std::int64_t to_int(const Rational& x) {
  if (x.get_den() != 1 || !x.get_num().fits_slong_p()) {
    throw std::runtime_error("fixture coefficient is not a small integer");
  }
  return x.get_num().get_si();
}

}  // namespace

oracle::IntArrangement int_arrangement(const Arrangement& a) {
  oracle::IntArrangement out;
  out.dim = a.dim();
  for (const auto& h : a.hyperplanes()) {
    std::vector<std::int64_t> n;
    for (const auto& c : h.normal) n.push_back(to_int(c));
    out.normals.push_back(std::move(n));
    out.offsets.push_back(to_int(h.offset));
  }
  return out;
}

std::vector<std::int64_t> int_gains(const GainVector& gains) {
  std::vector<std::int64_t> out;
  for (const auto& g : gains) out.push_back(to_int(g));
  return out;
}

UniPoly to_uni(const oracle::Poly& p) {
  UniPoly out;
  for (const auto& [d, c] : p) out.add_term(d, BigInt(static_cast<long>(c)));
  return out;
}

BiPoly to_bi(const oracle::Poly2& p) {
  BiPoly out;
  for (const auto& [e, c] : p) out.add_term(e.first, e.second, BigInt(static_cast<long>(c)));
  return out;
}

}  // namespace fixtures
