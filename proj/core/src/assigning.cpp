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

#include "semimat/assigning.hpp"

#include <algorithm>

namespace semimat {

Assigning::Assigning(std::vector<std::pair<Subset, int>> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].second != 0 && labels_[i].second != 1) {
      throw InvalidInput("assigning labels must be 0 or 1");
    }
    if (i > 0 && labels_[i].first == labels_[i - 1].first) {
      throw InvalidInput("circuit " + subset_string(labels_[i].first) + " labelled twice");
    }
  }
}

Assigning Assigning::constant(const std::vector<Subset>& circuits, int value) {
  std::vector<std::pair<Subset, int>> labels;
  for (Subset c : circuits) labels.emplace_back(c, value);
  return Assigning(std::move(labels));
}

int Assigning::label(Subset circuit) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), std::make_pair(circuit, 0));
  if (it == labels_.end() || it->first != circuit) {
    throw InvalidInput("no label for circuit " + subset_string(circuit));
  }
  return it->second;
}

std::vector<Subset> Assigning::circuits() const {
  std::vector<Subset> out;
  for (const auto& [c, v] : labels_) out.push_back(c);
  return out;
}

bool Assigning::leq(const Assigning& other) const {
  if (circuits() != other.circuits()) throw InvalidInput("assignings on different circuit sets");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].second > other.labels_[i].second) return false;
  }
  return true;
}

AssigningMatroid::AssigningMatroid(Matroid matroid, Assigning assigning)
    : matroid_(std::move(matroid)), assigning_(std::move(assigning)) {
  if (assigning_.circuits() != matroid_.circuits()) {
    throw InvalidInput("assigning must label exactly the circuits of the matroid");
  }
}

std::vector<Subset> AssigningMatroid::compatible_circuits() const {
  std::vector<Subset> out;
  for (const auto& [c, v] : assigning_.all()) {
    if (v == 0) out.push_back(c);
  }
  return out;
}

std::vector<Subset> compatible_family(const AssigningMatroid& a) {
  if (a.matroid().ground_size() > kMaxEnumeratedGround) {
    throw LimitExceeded("compatible family enumeration is capped at 16 elements");
  }
  std::vector<Subset> bad;
  for (const auto& [c, v] : a.assigning().all()) {
    if (v == 1) bad.push_back(c);
  }
  const Subset ground = a.matroid().ground();
  std::vector<Subset> out;
  for (Subset x = 0; x <= ground; ++x) {
    if (!is_subset(x, ground)) continue;
    const bool ok = std::none_of(bad.begin(), bad.end(), [&](Subset c) { return is_subset(c, x); });
    if (ok) out.push_back(x);
  }
  return out;
}

CompatiblePolynomials compatible_polynomials(const AssigningMatroid& a) {
  const Matroid& m = a.matroid();
  CompatiblePolynomials out;
  if (m.ground() == 0) return {UniPoly(1), BiPoly(1)};
  const int r = m.rank();
  for (Subset x : compatible_family(a)) {
    const int rx = m.rank(x);
    out.chi.add_term(r - rx, sign_power(popcount(x)));
    out.tutte += (BiPoly::t() - 1).pow(r - rx) * (BiPoly::s() - 1).pow(popcount(x) - rx);
  }
  return out;
}

RankedFamily compatible_ranked_family(const AssigningMatroid& a) {
  RankedFamily f;
  f.ground = a.matroid().ground();
  f.sets = compatible_family(a);
  for (Subset x : f.sets) f.rank[x] = a.matroid().rank(x);
  return f;
}

SemimatroidVerdict is_semimatroid(const AssigningMatroid& a) {
  SemimatroidVerdict out;
  out.report = verify_axioms(compatible_ranked_family(a));
  out.verdict = out.report.passed();
  out.failing_axiom = out.report.first_sr_failure();
  return out;
}

Semimatroid to_semimatroid(const AssigningMatroid& a) {
  return Semimatroid::create(compatible_ranked_family(a));
}

AssigningMatroid induced_assigning(const Semimatroid& s) {
  Matroid m = rank_extension_matroid(s);
  std::vector<std::pair<Subset, int>> labels;
  for (Subset c : m.circuits()) labels.emplace_back(c, s.is_central(c) ? 0 : 1);
  return AssigningMatroid(std::move(m), Assigning(std::move(labels)));
}

}  // namespace semimat
