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

#include "semimat/graph.hpp"

#include <algorithm>
#include <numeric>

namespace semimat {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
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

void check_gains(const MultiGraph& g, const GainVector& gains) {
  if (static_cast<int>(gains.size()) != g.edge_count()) {
    throw InvalidInput("gain vector length differs from the edge count");
  }
}

}  // namespace

void MultiGraph::validate() const {
  if (vertex_count < 0) throw InvalidInput("negative vertex count");
  if (edge_count() > kMaxGroundSize) {
    throw LimitExceeded("at most " + std::to_string(kMaxGroundSize) + " edges");
  }
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw InvalidInput("edge endpoint out of range");
    }
  }
}

void check_orientation(const MultiGraph& g, const Orientation& d) {
  if (d.size() != g.edges.size()) throw InvalidInput("orientation length differs from edge count");
  for (std::size_t e = 0; e < d.size(); ++e) {
    const auto [u, v] = g.edges[e];
    const auto [tail, head] = d[e];
    if (!((tail == u && head == v) || (tail == v && head == u))) {
      throw InvalidInput("arc " + std::to_string(e + 1) + " does not match its edge");
    }
  }
}

int components(const MultiGraph& g, Subset x) {
  UnionFind uf(g.vertex_count);
  int c = g.vertex_count;
  for (int e : elements(x)) {
    if (uf.unite(g.edges[e].first, g.edges[e].second)) --c;
  }
  return c;
}

std::vector<Subset> cycles(const MultiGraph& g) {
  g.validate();
  if (g.edge_count() > kMaxEnumeratedGround) throw LimitExceeded("cycle enumeration caps at 16 edges");
  std::vector<Subset> out;
  const Subset all = full_set(g.edge_count());
  std::vector<int> degree(g.vertex_count);
  for (Subset x = 1; x <= all && x != 0; ++x) {
    std::fill(degree.begin(), degree.end(), 0);
    for (int e : elements(x)) {
      ++degree[g.edges[e].first];
      ++degree[g.edges[e].second];
    }
    int touched = 0;
    bool regular = true;
    for (int d : degree) {
      if (d == 0) continue;
      ++touched;
      if (d != 2) regular = false;
    }
    if (!regular) continue;
    // A 2-regular edge set is connected iff it spans its vertices with
    // |V(X)| - 1 tree edges, i.e. has exactly one component among them.
    const int untouched = g.vertex_count - touched;
    if (components(g, x) - untouched == 1) out.push_back(x);
  }
  return out;
}

Matroid cycle_matroid(const MultiGraph& g) {
  g.validate();
  return Matroid::from_graph(g.vertex_count, g.edges);
}

AssigningGraph::AssigningGraph(MultiGraph graph_in, Assigning labels_in)
    : graph(std::move(graph_in)), labels(std::move(labels_in)) {
  if (labels.circuits() != cycles(graph)) {
    throw InvalidInput("assigning must label exactly the cycles of the graph");
  }
}

AssigningMatroid lift_assigning(const AssigningGraph& g) {
  return AssigningMatroid(cycle_matroid(g.graph), g.labels);
}

UniPoly compatible_chromatic(const AssigningGraph& g) {
  std::vector<Subset> bad;
  for (const auto& [c, v] : g.labels.all()) {
    if (v == 1) bad.push_back(c);
  }
  UniPoly out;
  const Subset all = full_set(g.graph.edge_count());
  for (Subset x = 0;; ++x) {
    if (std::none_of(bad.begin(), bad.end(), [&](Subset c) { return is_subset(c, x); })) {
      out.add_term(components(g.graph, x), sign_power(popcount(x)));
    }
    if (x == all) break;
  }
  return out;
}

GraphicArrangements graphic_arrangements(const MultiGraph& g, const Orientation& d,
                                         const GainVector& gains, const Field& field) {
  g.validate();
  check_orientation(g, d);
  check_gains(g, gains);
  std::vector<Hyperplane> linear;
  std::vector<Hyperplane> affine;
  for (int e = 0; e < g.edge_count(); ++e) {
    Vector normal(g.vertex_count, Rational(0));
    normal[d[e].second] += 1;
    normal[d[e].first] -= 1;
    linear.push_back(Hyperplane{normal, Rational(0)});
    affine.push_back(Hyperplane{std::move(normal), gains[e]});
  }
  return GraphicArrangements{Arrangement(field, g.vertex_count, std::move(linear)),
                             Arrangement(field, g.vertex_count, std::move(affine))};
}

Rational cycle_gain_sum(const MultiGraph& g, const Orientation& d, const GainVector& gains,
                        Subset cycle, const Field& field) {
  check_orientation(g, d);
  check_gains(g, gains);
  const auto members = elements(cycle);
  if (members.size() == 1) return field.normalize(gains[members[0]]);

  auto other_end = [&](int e, int v) {
    return g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
  };
  int start = g.vertex_count;
  for (int e : members) start = std::min({start, g.edges[e].first, g.edges[e].second});
  int first = -1;
  for (int e : members) {
    if (g.edges[e].first != start && g.edges[e].second != start) continue;
    if (first < 0 || other_end(e, start) < other_end(first, start)) first = e;
  }

  Rational sum = 0;
  int vertex = start;
  int edge = first;
  for (std::size_t step = 0; step < members.size(); ++step) {
    const int next = other_end(edge, vertex);
    sum += (d[edge].first == vertex) ? gains[edge] : Rational(-gains[edge]);
    vertex = next;
    int following = -1;
    for (int e : members) {
      if (e != edge && (g.edges[e].first == vertex || g.edges[e].second == vertex)) {
        following = e;
        break;
      }
    }
    edge = following;
  }
  return field.normalize(sum);
}

AssigningGraph admissible_assigning(const MultiGraph& g, const Orientation& d,
                                    const GainVector& gains, AdmissibleRoute route,
                                    const Field& field) {
  std::vector<std::pair<Subset, int>> labels;
  if (route == AdmissibleRoute::kAffineCircuits) {
    const auto arr = graphic_arrangements(g, d, gains, field);
    const auto affine = affine_circuits(arr.affinographic);
    for (Subset c : cycles(g)) {
      const bool zero = std::find(affine.begin(), affine.end(), c) != affine.end();
      labels.emplace_back(c, zero ? 0 : 1);
    }
  } else {
    for (Subset c : cycles(g)) {
      labels.emplace_back(c, cycle_gain_sum(g, d, gains, c, field) == 0 ? 0 : 1);
    }
  }
  return AssigningGraph(g, Assigning(std::move(labels)));
}

ColoringCount count_colorings(const MultiGraph& g, const Orientation& d,
                              const GainVector& gains, long q) {
  g.validate();
  check_orientation(g, d);
  check_gains(g, gains);
  const Field field = Field::prime(q);
  std::int64_t total = 1;
  for (int i = 0; i < g.vertex_count; ++i) {
    if (total > kPointBudget / q) {
      throw LimitExceeded("q^n exceeds the enumeration budget of " + std::to_string(kPointBudget));
    }
    total *= q;
  }

  ColoringCount out;
  std::vector<std::int64_t> gain(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Rational reduced = field.normalize(gains[e]);
    gain[e] = reduced.get_num().get_si();
    if (gains[e] != 0 && reduced == 0) {
      out.warnings.push_back("gain of edge " + std::to_string(e + 1) + " vanishes mod " +
                             std::to_string(q));
    }
  }
  if (g.edge_count() <= kMaxEnumeratedGround) {
    for (Subset c : cycles(g)) {
      const bool zero_q = cycle_gain_sum(g, d, gains, c, field) == 0;
      const bool zero_rational = cycle_gain_sum(g, d, gains, c) == 0;
      if (zero_q != zero_rational) {
        out.warnings.push_back("cycle " + subset_string(c) + " is balanced mod " +
                               std::to_string(q) + " but not over Q");
      }
    }
  }

  std::vector<std::int64_t> color(g.vertex_count, 0);
  std::int64_t count = 0;
  for (std::int64_t step = 0; step < total; ++step) {
    bool ok = true;
    for (int e = 0; e < g.edge_count() && ok; ++e) {
      const std::int64_t diff = ((color[d[e].second] - color[d[e].first]) % q + q) % q;
      if (diff == gain[e]) ok = false;
    }
    if (ok) ++count;
    for (int v = 0; v < g.vertex_count; ++v) {
      if (++color[v] < q) break;
      color[v] = 0;
    }
  }
  out.count = BigInt(static_cast<long>(count));
  return out;
}

}  // namespace semimat
