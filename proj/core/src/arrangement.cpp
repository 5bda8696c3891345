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

#include "semimat/arrangement.hpp"

#include <algorithm>
#include <map>

namespace semimat {

namespace {

Matrix augmented_rows(const Arrangement& a, Subset x) {
  Matrix rows;
  for (int e : elements(x)) {
    Vector row = a[e].normal;
    row.push_back(a[e].offset);
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix normal_rows(const Arrangement& a, Subset x) {
  Matrix rows;
  for (int e : elements(x)) rows.push_back(a[e].normal);
  return rows;
}

Vector offsets_of(const Arrangement& a, Subset x) {
  Vector v;
  for (int e : elements(x)) v.push_back(a[e].offset);
  return v;
}

// Reduced augmented system; nullopt when the hyperplanes do not meet.
std::optional<RowEchelon> meet(const Arrangement& a, Subset x) {
  RowEchelon e = row_reduce(augmented_rows(a, x), a.dim() + 1, a.field());
  if (!e.pivots.empty() && e.pivots.back() == a.dim()) return std::nullopt;
  return e;
}

Subset all_hyperplanes(const Arrangement& a) { return full_set(a.size()); }

void check_enumerable(const Arrangement& a) {
  if (a.size() > kMaxEnumeratedGround) {
    throw LimitExceeded("subset enumeration is capped at 16 hyperplanes");
  }
}

AffineChart chart_of(const Arrangement& a, Subset x) {
  auto chart = solve_affine(normal_rows(a, x), offsets_of(a, x), a.dim(), a.field());
  if (!chart) throw InvalidInput(subset_string(x) + " is not a central set");
  return *chart;
}

// Trace of hyperplane h on the chart x = base + sum u_j d_j.
Hyperplane trace_on(const Hyperplane& h, const AffineChart& chart, const Field& field) {
  Hyperplane t;
  for (const auto& d : chart.directions) t.normal.push_back(dot(h.normal, d, field));
  t.offset = field.normalize(h.offset - dot(h.normal, chart.base_point, field));
  return t;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

BiPoly tutte_sum(const RankedFamily& fam, int r) {
  BiPoly out;
  for (Subset x : fam.sets) {
    const int rx = fam.rank.at(x);
    out += (BiPoly::t() - 1).pow(r - rx) * (BiPoly::s() - 1).pow(popcount(x) - rx);
  }
  return out;
}

BiPoly arrangement_tutte(const Arrangement& a) {
  return tutte_sum(central_family(a), arrangement_rank(a));
}

}  // namespace

Arrangement::Arrangement(Field field, int dim, std::vector<Hyperplane> hyperplanes)
    : field_(field), dim_(dim), hyperplanes_(std::move(hyperplanes)) {
  if (dim_ < 0) throw InvalidInput("negative ambient dimension");
  if (static_cast<int>(hyperplanes_.size()) > kMaxGroundSize) {
    throw LimitExceeded("at most " + std::to_string(kMaxGroundSize) + " hyperplanes");
  }
  for (auto& h : hyperplanes_) {
    if (static_cast<int>(h.normal.size()) != dim_) {
      throw InvalidInput("normal length differs from the ambient dimension");
    }
    for (auto& v : h.normal) v = field_.normalize(v);
    h.offset = field_.normalize(h.offset);
  }
}

bool Arrangement::is_central() const {
  return std::all_of(hyperplanes_.begin(), hyperplanes_.end(),
                     [](const Hyperplane& h) { return h.offset == 0; });
}

std::vector<Vector> Arrangement::normals() const {
  std::vector<Vector> out;
  for (const auto& h : hyperplanes_) out.push_back(h.normal);
  return out;
}

int arrangement_rank(const Arrangement& a) {
  return matrix_rank(normal_rows(a, all_hyperplanes(a)), a.dim(), a.field());
}

RankedFamily central_family(const Arrangement& a) {
  check_enumerable(a);
  RankedFamily fam;
  fam.ground = all_hyperplanes(a);
  std::vector<char> central(std::size_t{1} << a.size(), 0);
  for (Subset x = 0; x <= fam.ground; ++x) {
    bool faces_ok = true;
    for (int e : elements(x)) {
      if (!central[x & ~bit(e)]) {
        faces_ok = false;
        break;
      }
    }
    if (!faces_ok) continue;
    if (auto e = meet(a, x)) {
      central[x] = 1;
      fam.sets.push_back(x);
      fam.rank[x] = e->rank();
    }
  }
  return fam;
}

Semimatroid semimatroid_of(const Arrangement& a) {
  return Semimatroid::create_unchecked(central_family(a));
}

Matroid normal_matroid(const Arrangement& a) {
  if (a.size() == 0) return Matroid::free(0);
  return Matroid::from_columns(a.normals(), a.field());
}

IntersectionLattice intersection_lattice(const Arrangement& a) {
  IntersectionLattice out;
  std::map<Matrix, std::size_t> index;
  for (Subset x : central_family(a).sets) {
    RowEchelon e = *meet(a, x);
    if (index.count(e.rref)) continue;
    index.emplace(e.rref, out.keys.size());
    out.dims.push_back(a.dim() - e.rank());
    out.keys.push_back(std::move(e.rref));
  }
  const int cols = a.dim() + 1;
  for (const auto& key : out.keys) {
    const int r = static_cast<int>(key.size());
    Subset containing = 0;
    for (int h = 0; h < a.size(); ++h) {
      Matrix rows = key;
      rows.push_back(augmented_rows(a, bit(h))[0]);
      if (matrix_rank(rows, cols, a.field()) == r) containing |= bit(h);
    }
    out.containing.push_back(containing);
  }
  const std::size_t n = out.keys.size();
  std::vector<char> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Reverse inclusion: flat i contains flat j.
      Matrix rows = out.keys[j];
      rows.insert(rows.end(), out.keys[i].begin(), out.keys[i].end());
      rel[i * n + j] = matrix_rank(rows, cols, a.field()) == static_cast<int>(out.keys[j].size());
    }
  }
  out.poset = FinitePoset::from_trusted_relation(
      n, [&](std::size_t i, std::size_t j) { return rel[i * n + j] != 0; });
  return out;
}

ArrangementPolynomials arrangement_polynomials(const Arrangement& a) {
  const RankedFamily fam = central_family(a);
  const int n = a.dim();
  ArrangementPolynomials out;
  for (Subset x : fam.sets) out.chi.add_term(n - fam.rank.at(x), sign_power(popcount(x)));
  out.tutte = tutte_sum(fam, arrangement_rank(a));

  bool loop = false;
  for (int e = 0; e < a.size(); ++e) {
    if (fam.rank.count(bit(e)) && fam.rank.at(bit(e)) == 0) loop = true;
  }
  if (!loop) {
    const IntersectionLattice lattice = intersection_lattice(a);
    const auto mu = mobius_table(lattice.poset);
    UniPoly chi;
    for (std::size_t i = 0; i < lattice.keys.size(); ++i) {
      chi.add_term(lattice.dims[i], mu.value_or_zero(0, i));
    }
    out.chi_mobius = std::move(chi);
  }
  return out;
}

Arrangement subarrangement(const Arrangement& a, Subset x) {
  std::vector<Hyperplane> hs;
  for (int e : elements(x)) hs.push_back(a[e]);
  return Arrangement(a.field(), a.dim(), std::move(hs));
}

LocalizationRestriction localization_restriction(const Arrangement& a, Subset flat) {
  const Semimatroid s = semimatroid_of(a);
  if (!s.is_flat(flat)) throw InvalidInput(subset_string(flat) + " is not a flat");
  AffineChart chart = chart_of(a, flat);
  std::vector<Hyperplane> traces;
  std::vector<int> source;
  Subset localization = 0;
  bool degenerate = false;
  for (int e = 0; e < a.size(); ++e) {
    Hyperplane t = trace_on(a[e], chart, a.field());
    if (is_zero(t.normal)) {
      if (t.offset != 0) continue;  // the trace is empty
      degenerate = true;
      localization |= bit(e);
    }
    traces.push_back(std::move(t));
    source.push_back(e);
  }
  const int dim = chart.dim();
  return LocalizationRestriction{std::move(chart),
                                 localization,
                                 subarrangement(a, localization),
                                 Arrangement(a.field(), dim, std::move(traces)),
                                 std::move(source),
                                 degenerate};
}

Arrangement trace_arrangement(const Arrangement& a, Subset x) {
  const AffineChart chart = chart_of(a, x);
  std::vector<Hyperplane> traces;
  for (int e = 0; e < a.size(); ++e) {
    if (!has(x, e)) traces.push_back(trace_on(a[e], chart, a.field()));
  }
  return Arrangement(a.field(), chart.dim(), std::move(traces));
}

HcfReport hcf(const Arrangement& a) {
  HcfReport out;
  out.lhs = arrangement_tutte(a);
  const Semimatroid s = semimatroid_of(a);
  std::map<Subset, BiPoly> term;
  for (Subset x : s.central_sets()) {
    const BiPoly t = arrangement_tutte(subarrangement(a, x)).at_t(0) *
                     arrangement_tutte(trace_arrangement(a, x)).at_s(0);
    out.rhs_central += t;
    term.emplace(x, t);
  }
  for (Subset x : s.flats()) out.rhs_flats += term.at(x);
  return out;
}

std::vector<Subset> affine_circuits(const Arrangement& a) {
  const RankedFamily fam = central_family(a);
  std::vector<Subset> out;
  for (Subset c : fam.sets) {
    if (c == 0) continue;
    const int rc = fam.rank.at(c);
    bool stable = true;
    for (int e : elements(c)) {
      if (fam.rank.at(c & ~bit(e)) != rc) {
        stable = false;
        break;
      }
    }
    if (!stable) continue;
    const bool minimal = std::none_of(out.begin(), out.end(),
                                      [&](Subset d) { return is_subset(d, c); });
    if (minimal) out.push_back(c);
  }
  return out;
}

std::vector<Subset> affine_circuits_by_augmented_rank(const Arrangement& a) {
  std::vector<Subset> out;
  for (Subset c : normal_matroid(a).circuits()) {
    if (matrix_rank(augmented_rows(a, c), a.dim() + 1, a.field()) < popcount(c)) {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<CircuitVector> circuit_vectors(const Arrangement& a_o) {
  if (!a_o.is_central()) throw InvalidInput("circuit vectors need a central arrangement");
  const Field& f = a_o.field();
  std::vector<CircuitVector> out;
  for (Subset c : normal_matroid(a_o).circuits()) {
    const auto members = elements(c);
    Matrix rows(a_o.dim(), Vector(members.size()));
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (int i = 0; i < a_o.dim(); ++i) rows[i][k] = a_o[members[k]].normal[i];
    }
    const auto kernel = nullspace(rows, static_cast<int>(members.size()), f);
    if (kernel.size() != 1) throw Error("circuit kernel is not one-dimensional");
    CircuitVector cv{c, Vector(a_o.size(), Rational(0))};
    Rational lead = 0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (lead == 0) lead = kernel[0][k];
      cv.coefficients[members[k]] = f.normalize(kernel[0][k] / lead);
    }
    out.push_back(std::move(cv));
  }
  return out;
}

Arrangement discriminantal(const Arrangement& a_o) {
  std::vector<Hyperplane> hs;
  for (const auto& cv : circuit_vectors(a_o)) {
    Hyperplane h{cv.coefficients, Rational(0)};
    if (std::find(hs.begin(), hs.end(), h) != hs.end()) continue;
    if (static_cast<int>(hs.size()) == kMaxGroundSize) {
      throw LimitExceeded("discriminantal arrangement exceeds " +
                          std::to_string(kMaxGroundSize) + " hyperplanes");
    }
    hs.push_back(std::move(h));
  }
  return Arrangement(a_o.field(), a_o.size(), std::move(hs));
}

Arrangement translate(const Arrangement& a_o, const Vector& offsets) {
  if (static_cast<int>(offsets.size()) != a_o.size()) {
    throw InvalidInput("translation vector length differs from the number of hyperplanes");
  }
  std::vector<Hyperplane> hs = a_o.hyperplanes();
  for (std::size_t e = 0; e < hs.size(); ++e) hs[e].offset = offsets[e];
  return Arrangement(a_o.field(), a_o.dim(), std::move(hs));
}

Assigning assigning_of_translation(const Arrangement& a_o, const Vector& offsets,
                                   AssigningRoute route) {
  const Arrangement a = translate(a_o, offsets);
  std::vector<std::pair<Subset, int>> labels;
  if (route == AssigningRoute::kAffineCircuits) {
    const auto affine = affine_circuits(a);
    for (Subset c : normal_matroid(a_o).circuits()) {
      const bool zero = std::find(affine.begin(), affine.end(), c) != affine.end();
      labels.emplace_back(c, zero ? 0 : 1);
    }
  } else {
    const Arrangement centered = translate(a_o, Vector(a_o.size(), Rational(0)));
    const Vector shift = offsets_of(a, all_hyperplanes(a));
    for (const auto& cv : circuit_vectors(centered)) {
      const bool zero = dot(cv.coefficients, shift, a.field()) == 0;
      labels.emplace_back(cv.circuit, zero ? 0 : 1);
    }
  }
  return Assigning(std::move(labels));
}

Vector representative_point(const Arrangement& delta, Subset flat) {
  if (delta.field().is_prime()) throw InvalidInput("representative points are computed over Q");
  if (delta.size() == 0) return Vector(delta.dim(), Rational(0));
  const AffineChart chart = chart_of(delta, flat);
  std::vector<int> avoid;
  for (int h = 0; h < delta.size(); ++h) {
    if (has(flat, h)) continue;
    const Hyperplane t = trace_on(delta[h], chart, delta.field());
    if (is_zero(t.normal) && t.offset == 0) {
      throw InvalidInput(subset_string(flat) + " is not a flat of the arrangement");
    }
    avoid.push_back(h);
  }
  for (long b = 2;; ++b) {
    Vector point = chart.base_point;
    BigInt power = 1;
    for (const auto& d : chart.directions) {
      for (std::size_t i = 0; i < point.size(); ++i) point[i] += Rational(power) * d[i];
      power *= b;
    }
    const bool clear = std::none_of(avoid.begin(), avoid.end(), [&](int h) {
      return dot(delta[h].normal, point, delta.field()) == delta[h].offset;
    });
    if (clear) return point;
  }
}

Subset stratum_of(const Arrangement& delta, const Vector& point) {
  Subset on = 0;
  for (int h = 0; h < delta.size(); ++h) {
    if (dot(delta[h].normal, point, delta.field()) == delta[h].offset) on |= bit(h);
  }
  return on;
}

std::vector<TranslationClass> classify_translations(const Arrangement& a_o) {
  if (a_o.field().is_prime()) throw InvalidInput("classification is implemented over Q only");
  if (!a_o.is_central()) throw InvalidInput("classification needs a central arrangement");
  const Arrangement delta = discriminantal(a_o);
  std::vector<TranslationClass> out;
  for (Subset f : normal_matroid(delta).flats()) {
    TranslationClass c;
    c.flat = f;
    c.representative = representative_point(delta, f);
    const Arrangement a = translate(a_o, c.representative);
    c.semimatroid = semimatroid_of(a);
    c.assigning = assigning_of_translation(a_o, c.representative);
    out.push_back(std::move(c));
  }
  return out;
}

BigInt count_points_finite_field(const Arrangement& a) {
  if (!a.field().is_prime()) throw InvalidInput("point counting needs a prime field");
  const std::int64_t p = a.field().characteristic();
  std::int64_t total = 1;
  for (int i = 0; i < a.dim(); ++i) {
    if (total > kPointBudget / p) {
      throw LimitExceeded("p^n exceeds the enumeration budget of " + std::to_string(kPointBudget));
    }
    total *= p;
  }
  const int m = a.size();
  std::vector<std::vector<std::int64_t>> normal(m, std::vector<std::int64_t>(a.dim()));
  std::vector<std::int64_t> offset(m);
  for (int h = 0; h < m; ++h) {
    for (int i = 0; i < a.dim(); ++i) normal[h][i] = a[h].normal[i].get_num().get_si();
    offset[h] = a[h].offset.get_num().get_si();
  }
  // Odometer over F_p^n; each step adds the normals' entries of every digit
  // that changes, since both +1 and the wrap p-1 -> 0 are +1 mod p.
  std::vector<std::int64_t> value(m, 0);
  std::vector<std::int64_t> digit(a.dim(), 0);
  std::int64_t count = 0;
  for (std::int64_t step = 0; step < total; ++step) {
    bool clear = true;
    for (int h = 0; h < m; ++h) {
      if (value[h] == offset[h]) {
        clear = false;
        break;
      }
    }
    if (clear) ++count;
    for (int i = 0; i < a.dim(); ++i) {
      for (int h = 0; h < m; ++h) value[h] = (value[h] + normal[h][i]) % p;
      if (++digit[i] < p) break;
      digit[i] = 0;
    }
  }
  return BigInt(static_cast<long>(count));
}

Arrangement reduce_mod(const Arrangement& a, long p) {
  if (a.field().is_prime()) throw InvalidInput("reduce_mod expects a rational arrangement");
  return Arrangement(Field::prime(p), a.dim(), a.hyperplanes());
}

}  // namespace semimat
