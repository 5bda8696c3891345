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

#include "semimat/semimatroid.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace semimat {

namespace {

constexpr std::array<Axiom, 7> kAllAxioms = {
    Axiom::kSimplicial, Axiom::kRanksConsistent, Axiom::kSR1, Axiom::kSR2,
    Axiom::kSR3,        Axiom::kSR4,             Axiom::kSR5};

bool is_sr(Axiom a) { return a != Axiom::kSimplicial && a != Axiom::kRanksConsistent; }

// Submasks of `mask` in increasing numeric order.
template <class F>
void for_each_submask(Subset mask, F&& f) {
  Subset sub = 0;
  while (true) {
    f(sub);
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

}  // namespace

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kSimplicial: return "simplicial";
    case Axiom::kRanksConsistent: return "ranks_consistent";
    case Axiom::kSR1: return "SR1";
    case Axiom::kSR2: return "SR2";
    case Axiom::kSR3: return "SR3";
    case Axiom::kSR4: return "SR4";
    case Axiom::kSR5: return "SR5";
  }
  return "unknown";
}

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

std::optional<AxiomCheck> AxiomReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return c;
  }
  return std::nullopt;
}

std::optional<AxiomCheck> AxiomReport::first_sr_failure() const {
  for (const auto& c : checks) {
    if (!c.passed && is_sr(c.axiom)) return c;
  }
  return std::nullopt;
}

AxiomReport verify_axioms(const RankedFamily& family) {
  AxiomReport report;
  for (Axiom a : kAllAxioms) report.checks.push_back(AxiomCheck{a});
  auto fail = [&](Axiom a, Subset x, Subset y) {
    auto& c = report.checks[static_cast<int>(a)];
    if (c.passed) c = AxiomCheck{a, false, x, y};
  };

  std::vector<Subset> sets = family.sets;
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  Subset span = family.ground;
  for (Subset x : sets) span |= x;
  for (const auto& [x, r] : family.rank) span |= x;
  if (width(span) > kMaxGroundSize) throw LimitExceeded("subset labels exceed the bitmask cap");
  std::vector<char> member(std::size_t{1} << width(span), 0);
  for (Subset x : sets) member[x] = 1;

  // Simplicial complex on the ground set.
  if (!member[0]) fail(Axiom::kSimplicial, 0, 0);
  for (Subset x : sets) {
    if (!is_subset(x, family.ground)) fail(Axiom::kSimplicial, x, x);
    for (int e : elements(x)) {
      if (!member[x & ~bit(e)]) fail(Axiom::kSimplicial, x, x & ~bit(e));
    }
  }

  // Rank defined exactly on the family.
  std::vector<int> rank(member.size(), -1);
  std::vector<char> has_rank(member.size(), 0);
  for (const auto& [x, r] : family.rank) {
    if (!member[x]) fail(Axiom::kRanksConsistent, x, x);
    rank[x] = r;
    has_rank[x] = 1;
  }
  for (Subset x : sets) {
    if (!has_rank[x]) fail(Axiom::kRanksConsistent, x, x);
  }

  auto known = [&](Subset x) { return member[x] && has_rank[x]; };
  for (Subset x : sets) {
    if (known(x) && (rank[x] < 0 || rank[x] > popcount(x))) fail(Axiom::kSR1, x, x);
  }

  for (auto xi = sets.rbegin(); xi != sets.rend(); ++xi) {
    const Subset x = *xi;
    if (!known(x)) continue;
    for (Subset y : sets) {
      if (!known(y)) continue;
      const Subset meet = x & y;
      const Subset join = x | y;
      if (is_subset(x, y) && rank[x] > rank[y]) fail(Axiom::kSR2, x, y);
      if (member[join] && known(join) && known(meet) &&
          rank[meet] + rank[join] > rank[x] + rank[y]) {
        fail(Axiom::kSR3, x, y);
      }
      if (known(meet) && rank[x] == rank[meet] && !member[join]) fail(Axiom::kSR4, x, y);
      if (rank[x] < rank[y]) {
        bool found = false;
        for (int e : elements(y & ~x)) {
          if (member[x | bit(e)]) {
            found = true;
            break;
          }
        }
        if (!found) fail(Axiom::kSR5, x, y);
      }
    }
  }
  return report;
}

Semimatroid::Semimatroid(Subset ground, std::vector<std::int8_t> table)
    : ground_(ground), table_(std::move(table)) {
  for (Subset x = 0; x < table_.size(); ++x) {
    if (table_[x] >= 0) {
      central_.push_back(x);
      rank_ = std::max<int>(rank_, table_[x]);
    }
  }
}

Semimatroid Semimatroid::create(const RankedFamily& family) {
  if (popcount(family.ground) > kMaxGroundSize || width(family.ground) > kMaxGroundSize) {
    throw LimitExceeded("ground set exceeds the cap of " + std::to_string(kMaxGroundSize));
  }
  const AxiomReport report = verify_axioms(family);
  if (auto f = report.first_failure()) {
    throw InvalidInput("not a semimatroid: " + axiom_name(f->axiom) + " fails at X=" +
                       subset_string(f->x) + ", Y=" + subset_string(f->y));
  }
  std::vector<std::int8_t> table(std::size_t{1} << width(family.ground), -1);
  for (const auto& [x, r] : family.rank) table[x] = static_cast<std::int8_t>(r);
  return Semimatroid(family.ground, std::move(table));
}

Semimatroid Semimatroid::create_unchecked(const RankedFamily& family) {
  if (popcount(family.ground) > kMaxGroundSize || width(family.ground) > kMaxGroundSize) {
    throw LimitExceeded("ground set exceeds the cap of " + std::to_string(kMaxGroundSize));
  }
  std::vector<std::int8_t> table(std::size_t{1} << width(family.ground), -1);
  for (Subset x : family.sets) {
    auto it = family.rank.find(x);
    if (!is_subset(x, family.ground) || it == family.rank.end()) {
      throw InvalidInput("family set " + subset_string(x) + " lacks a rank or lies outside E");
    }
    table[x] = static_cast<std::int8_t>(it->second);
  }
  if (table[0] < 0) throw InvalidInput("the empty set must be central");
  for (Subset x : family.sets) {
    for (int e : elements(x)) {
      if (table[x & ~bit(e)] < 0) throw InvalidInput("family is not downward closed");
    }
  }
  return Semimatroid(family.ground, std::move(table));
}

Semimatroid Semimatroid::from_matroid(const Matroid& m) {
  const Subset ground = m.ground();
  std::vector<std::int8_t> table(std::size_t{1} << width(ground), -1);
  for (Subset x = 0; x <= ground; ++x) {
    if (is_subset(x, ground)) table[x] = static_cast<std::int8_t>(m.rank(x));
  }
  return Semimatroid(ground, std::move(table));
}

Semimatroid Semimatroid::from_pointed_matroid(const Matroid& n, int p) {
  if (p < 0 || p >= kMaxGroundSize || !has(n.ground(), p)) {
    throw InvalidInput("pointed element is not in the ground set");
  }
  if (n.is_loop(p)) throw InvalidInput("pointed element must not be a loop");
  const Subset ground = n.ground() & ~bit(p);
  std::vector<std::int8_t> table(std::size_t{1} << width(ground), -1);
  for (Subset x = 0; x <= ground; ++x) {
    if (is_subset(x, ground) && !has(n.closure(x), p)) {
      table[x] = static_cast<std::int8_t>(n.rank(x));
    }
  }
  return Semimatroid(ground, std::move(table));
}

int Semimatroid::rank(Subset x) const {
  if (!is_central(x)) throw InvalidInput(subset_string(x) + " is not a central set");
  return table_[x];
}

RankedFamily Semimatroid::family() const {
  RankedFamily f;
  f.ground = ground_;
  f.sets = central_;
  for (Subset x : central_) f.rank[x] = table_[x];
  return f;
}

Subset Semimatroid::closure(Subset x) const {
  const int r = rank(x);
  Subset cl = x;
  for (int e : elements(ground_ & ~x)) {
    const Subset y = x | bit(e);
    if (table_[y] == r) cl |= bit(e);
  }
  return cl;
}

std::vector<Subset> Semimatroid::flats() const {
  std::vector<Subset> out;
  for (Subset x : central_) {
    if (closure(x) == x) out.push_back(x);
  }
  return out;
}

bool Semimatroid::has_loop() const {
  for (int e : elements(ground_)) {
    if (is_loop(e)) return true;
  }
  return false;
}

std::vector<Subset> Semimatroid::bases() const {
  std::vector<Subset> out;
  for (Subset x : central_) {
    if (!is_independent(x)) continue;
    bool maximal = true;
    for (int e : elements(ground_ & ~x)) {
      if (is_independent(x | bit(e))) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

bool Semimatroid::is_bridge(int e) const {
  if (!has(ground_, e)) return false;
  const auto b = bases();
  return std::all_of(b.begin(), b.end(), [&](Subset x) { return has(x, e); });
}

std::vector<Subset> Semimatroid::circuits() const {
  std::vector<Subset> out;
  for (Subset x : central_) {
    if (is_independent(x)) continue;
    bool minimal = true;
    for (int e : elements(x)) {
      if (!is_independent(x & ~bit(e))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

Semimatroid Semimatroid::restrict_to(Subset x) const {
  if (!is_subset(x, ground_)) throw InvalidInput("restriction set outside the ground set");
  std::vector<std::int8_t> table(std::size_t{1} << width(x), -1);
  for (Subset y : central_) {
    if (is_subset(y, x)) table[y] = table_[y];
  }
  return Semimatroid(x, std::move(table));
}

Semimatroid Semimatroid::contract(Subset x) const {
  const int rx = rank(x);
  const Subset ground = ground_ & ~x;
  std::vector<std::int8_t> table(std::size_t{1} << width(ground), -1);
  for (Subset y : central_) {
    if (is_subset(x, y)) table[y & ~x] = static_cast<std::int8_t>(table_[y] - rx);
  }
  return Semimatroid(ground, std::move(table));
}

SemiFlatSemilattice::SemiFlatSemilattice(const Semimatroid& s) : flats_(s.flats()) {
  std::stable_sort(flats_.begin(), flats_.end(),
                   [&](Subset a, Subset b) { return s.rank(a) < s.rank(b); });
  for (Subset f : flats_) ranks_.push_back(s.rank(f));
  const std::size_t n = flats_.size();
  plain_ = FinitePoset::from_trusted_relation(
      n, [&](std::size_t i, std::size_t j) { return is_subset(flats_[i], flats_[j]); });
  augmented_ = FinitePoset::from_trusted_relation(n + 1, [&](std::size_t i, std::size_t j) {
    if (j == n) return true;
    if (i == n) return false;
    return is_subset(flats_[i], flats_[j]);
  });
}

std::size_t SemiFlatSemilattice::index_of(Subset flat) const {
  auto it = std::find(flats_.begin(), flats_.end(), flat);
  if (it == flats_.end()) throw InvalidInput(subset_string(flat) + " is not a flat");
  return static_cast<std::size_t>(it - flats_.begin());
}

namespace {

using MemoKey = std::vector<std::uint32_t>;

MemoKey memo_key(const Semimatroid& s) {
  MemoKey key{s.ground()};
  for (Subset y : s.central_sets()) key.push_back((y << 5) | static_cast<Subset>(s.rank(y)));
  return key;
}

// Shared four-case recursion on the lowest ground element.
template <class Poly>
class DeletionContraction {
 public:
  struct Rules {
    Poly empty;
    std::function<Poly(const Poly& contracted)> loop;
    std::function<Poly(const Poly& deleted)> bridge;
    std::function<Poly(const Poly& deleted, const Poly& contracted)> generic;
  };

  explicit DeletionContraction(Rules rules) : rules_(std::move(rules)) {}

  Poly operator()(const Semimatroid& s) {
    if (s.ground() == 0) return rules_.empty;
    MemoKey key = memo_key(s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int e = lowest(s.ground());
    Poly out;
    if (s.is_loop(e)) {
      out = rules_.loop((*this)(s.contract(bit(e))));
    } else if (s.is_bridge(e)) {
      out = rules_.bridge((*this)(s.delete_set(bit(e))));
    } else if (s.is_central(bit(e))) {
      out = rules_.generic((*this)(s.delete_set(bit(e))), (*this)(s.contract(bit(e))));
    } else {
      out = (*this)(s.delete_set(bit(e)));
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  Rules rules_;
  std::map<MemoKey, Poly> memo_;
};

}  // namespace

BiPoly tutte(const Semimatroid& s, TutteRoute route) {
  if (route == TutteRoute::kDeletionContraction) {
    DeletionContraction<BiPoly> dc({
        BiPoly(1),
        [](const BiPoly& c) { return BiPoly::s() * c; },
        [](const BiPoly& d) { return BiPoly::t() * d; },
        [](const BiPoly& d, const BiPoly& c) { return d + c; },
    });
    return dc(s);
  }
  if (s.ground() == 0) return BiPoly(1);
  const int r = s.rank();
  std::vector<BiPoly> tp(r + 1, BiPoly(1));
  for (int i = 1; i <= r; ++i) tp[i] = tp[i - 1] * (BiPoly::t() - 1);
  std::vector<BiPoly> sp(s.ground_size() + 1, BiPoly(1));
  for (std::size_t i = 1; i < sp.size(); ++i) sp[i] = sp[i - 1] * (BiPoly::s() - 1);
  BiPoly out;
  for (Subset x : s.central_sets()) {
    const int rx = s.rank(x);
    out += tp[r - rx] * sp[popcount(x) - rx];
  }
  return out;
}

UniPoly characteristic(const Semimatroid& s, CharRoute route) {
  switch (route) {
    case CharRoute::kDefinition: {
      if (s.ground() == 0) return UniPoly(1);
      UniPoly out;
      for (Subset x : s.central_sets()) out.add_term(s.rank() - s.rank(x), sign_power(popcount(x)));
      return out;
    }
    case CharRoute::kMobius: {
      if (s.has_loop()) throw InvalidInput("the Mobius route requires a loopless semimatroid");
      const SemiFlatSemilattice lattice(s);
      const FinitePoset& poset = lattice.poset(false);
      const auto mu = mobius_table(poset);
      UniPoly out;
      for (std::size_t i = 0; i < lattice.flats().size(); ++i) {
        out.add_term(s.rank() - lattice.ranks()[i], mu.at(0, i));
      }
      return out;
    }
    case CharRoute::kDeletionContraction: {
      DeletionContraction<UniPoly> dc({
          UniPoly(1),
          [](const UniPoly&) { return UniPoly(); },
          [](const UniPoly& d) { return (UniPoly::variable() - 1) * d; },
          [](const UniPoly& d, const UniPoly& c) { return d - c; },
      });
      return dc(s);
    }
  }
  throw InvalidInput("unknown route");
}

BigInt mobius_closed_form(const Semimatroid& s, Subset x, Subset y) {
  if (!s.is_flat(x) || !s.is_flat(y)) throw InvalidInput("Mobius arguments must be flats");
  if (!is_subset(x, y)) return 0;
  BigInt total = 0;
  for_each_submask(y & ~x, [&](Subset extra) {
    const Subset z = x | extra;
    if (s.is_central(z) && s.closure(z) == y) total += sign_power(popcount(extra));
  });
  return total;
}

BigInt mobius_recursive(const Semimatroid& s, Subset x, Subset y) {
  if (!s.is_flat(x) || !s.is_flat(y)) throw InvalidInput("Mobius arguments must be flats");
  const SemiFlatSemilattice lattice(s);
  const auto mu = mobius_table(lattice.poset(false));
  return mu.value_or_zero(lattice.index_of(x), lattice.index_of(y));
}

BrokenCircuitContext broken_circuit_analysis(const Semimatroid& s,
                                             const std::vector<int>& ordering) {
  std::vector<int> sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != elements(s.ground())) {
    throw InvalidInput("ordering must list every ground element exactly once");
  }
  std::vector<int> position(kMaxGroundSize, 0);
  for (std::size_t i = 0; i < ordering.size(); ++i) position[ordering[i]] = static_cast<int>(i);

  BrokenCircuitContext out;
  out.ordering = ordering;
  for (Subset c : s.circuits()) {
    const auto members = elements(c);
    const int min = *std::min_element(members.begin(), members.end(), [&](int a, int b) {
      return position[a] < position[b];
    });
    out.broken_circuits.push_back(c & ~bit(min));
  }
  std::sort(out.broken_circuits.begin(), out.broken_circuits.end());
  out.broken_circuits.erase(std::unique(out.broken_circuits.begin(), out.broken_circuits.end()),
                            out.broken_circuits.end());

  out.nbc_counts.rank = s.rank();
  out.nbc_counts.values.assign(s.rank() + 1, BigInt(0));
  for (Subset x : s.central_sets()) {
    const bool contains = std::any_of(out.broken_circuits.begin(), out.broken_circuits.end(),
                                      [&](Subset b) { return is_subset(b, x); });
    if (contains) continue;
    if (popcount(x) > s.rank()) throw Error("NBC set larger than the rank");
    out.nbc_counts.values[popcount(x)] += 1;
  }
  return out;
}

Matroid rank_extension_matroid(const Semimatroid& s) {
  const Subset ground = s.ground();
  std::vector<int> ext(std::size_t{1} << width(ground), 0);
  for (Subset x = 0; x <= ground; ++x) {
    if (!is_subset(x, ground)) continue;
    if (s.is_central(x)) {
      ext[x] = s.rank(x);
      continue;
    }
    int best = 0;
    for (int e : elements(x)) best = std::max(best, ext[x & ~bit(e)]);
    ext[x] = best;
  }
  return Matroid::from_rank_function(ground, [&](Subset x) { return ext[x]; });
}

}  // namespace semimat
