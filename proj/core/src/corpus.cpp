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

#include "semimat/corpus.hpp"

#include <cstdio>

namespace semimat {

namespace {

int draw(CorpusRng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string padded(int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d", i);
  return buf;
}

}  // namespace

Arrangement random_arrangement(CorpusRng& rng, int max_dim, int max_size) {
  const int dim = draw(rng, 1, max_dim);
  const int size = draw(rng, 1, max_size);
  std::vector<Hyperplane> hs;
  for (int i = 0; i < size; ++i) {
    Hyperplane h;
    bool nonzero = false;
    while (!nonzero) {
      h.normal.clear();
      for (int j = 0; j < dim; ++j) {
        const int c = draw(rng, -2, 2);
        nonzero = nonzero || c != 0;
        h.normal.emplace_back(c);
      }
    }
    h.offset = draw(rng, -2, 2);
    hs.push_back(std::move(h));
  }
  return Arrangement(Field::rationals(), dim, std::move(hs));
}

GraphInput random_graph(CorpusRng& rng, int max_vertices, int max_edges) {
  GraphInput g;
  const int n = draw(rng, 2, max_vertices);
  const int m = draw(rng, 1, max_edges);
  g.graph.vertex_count = n;
  for (int i = 0; i < m; ++i) {
    const int u = draw(rng, 0, n - 1);
    int v = draw(rng, 0, n - 2);
    if (v >= u) ++v;
    g.graph.edges.emplace_back(std::min(u, v), std::max(u, v));
    if (rng() % 2 == 0) {
      g.orientation.emplace_back(u, v);
    } else {
      g.orientation.emplace_back(v, u);
    }
    g.gains.emplace_back(draw(rng, -1, 2));
  }
  return g;
}

AssigningMatroid random_assigning_matroid(CorpusRng& rng, int max_size) {
  const int n = draw(rng, 1, max_size);
  const int rows = draw(rng, 1, 3);
  std::vector<Vector> columns;
  for (int e = 0; e < n; ++e) {
    Vector col;
    for (int i = 0; i < rows; ++i) col.emplace_back(draw(rng, -1, 1));
    columns.push_back(std::move(col));
  }
  Matroid m = Matroid::from_columns(columns, Field::rationals());
  std::vector<std::pair<Subset, int>> labels;
  for (Subset c : m.circuits()) labels.emplace_back(c, static_cast<int>(rng() % 2));
  return AssigningMatroid(std::move(m), Assigning(std::move(labels)));
}

std::vector<CorpusItem> corpus_gen(std::uint64_t seed, int count) {
  CorpusRng rng(seed);
  std::vector<CorpusItem> items;
  for (int i = 0; i < count; ++i) {
    CorpusItem item;
    switch (i % 3) {
      case 0:
        item.kind = "arrangement";
        item.json = to_json(random_arrangement(rng));
        break;
      case 1:
        item.kind = "graph";
        item.json = to_json(random_graph(rng));
        break;
      default:
        item.kind = "assigning";
        item.json = to_json(random_assigning_matroid(rng));
        break;
    }
    item.name = item.kind + "-" + padded(i);
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace semimat
