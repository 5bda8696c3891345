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

// Acceptance harness: one [PASS]/[FAIL] line per criterion, exit status 1 if
// any criterion fails. All comparisons are exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "semimat/arrangement.hpp"
#include "semimat/assigning.hpp"
#include "semimat/convolution.hpp"
#include "semimat/corpus.hpp"
#include "semimat/graph.hpp"
#include "semimat/matroid.hpp"
#include "semimat/poset.hpp"
#include "semimat/semimatroid.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using namespace semimat;
using fixtures::NamedSemimatroid;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (ok) first_failure = why;
    ok = false;
  }
};

const UniPoly kT = UniPoly::variable();

UniPoly t_power(int k) { return UniPoly::monomial(k); }

bool leq_pointwise(const WhitneySeq& a, const WhitneySeq& b) {
  if (a.values.size() != b.values.size()) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i] > b.values[i]) return false;
  }
  return true;
}

// 1. Every row of the U_{2,4} table, transcribed literally.
Outcome table1() {
  struct Row {
    std::vector<int> zeros;
    std::vector<int> removed;  // circuits missing from 2^E
    bool removes_e;
    bool expected;
  };
  const std::vector<Row> rows = {
      {{}, {1, 2, 3, 4}, true, true},
      {{1}, {2, 3, 4}, true, true},
      {{2}, {1, 3, 4}, true, true},
      {{3}, {1, 2, 4}, true, true},
      {{4}, {1, 2, 3}, true, true},
      {{1, 2}, {3, 4}, true, false},
      {{1, 3}, {2, 4}, true, false},
      {{1, 4}, {2, 3}, true, false},
      {{2, 3}, {1, 4}, true, false},
      {{2, 4}, {1, 3}, true, false},
      {{3, 4}, {1, 2}, true, false},
      {{1, 2, 3}, {4}, true, false},
      {{1, 2, 4}, {3}, true, false},
      {{1, 3, 4}, {2}, true, false},
      {{2, 3, 4}, {1}, true, false},
      {{1, 2, 3, 4}, {}, false, true},
  };
  Outcome out;
  int matched = 0;
  for (const Row& row : rows) {
    const AssigningMatroid a = fixtures::table1_row(row.zeros);
    std::set<Subset> expected;
    for (Subset x = 0; x < 16; ++x) expected.insert(x);
    for (int i : row.removed) expected.erase(fixtures::u24_circuit(i));
    if (row.removes_e) expected.erase(full_set(4));
    const std::vector<Subset> family = compatible_family(a);
    const bool family_ok = std::vector<Subset>(expected.begin(), expected.end()) == family;
    const bool verdict_ok = is_semimatroid(a).verdict == row.expected;
    if (family_ok && verdict_ok) {
      ++matched;
    } else {
      out.fail("row with " + std::to_string(row.zeros.size()) + " zero labels");
    }
  }
  out.detail = std::to_string(matched) + "/16 rows";
  return out;
}

// 2. Three characteristic routes, two Tutte routes, oracle sums and the
// specialization chi = (-1)^r T(1-t, 0).
Outcome route_agreement(const std::vector<NamedSemimatroid>& corpus) {
  Outcome out;
  int mobius = 0;
  for (const auto& [name, s] : corpus) {
    const oracle::Ranks ranks = fixtures::ranks_of(s);
    const UniPoly chi = characteristic(s, CharRoute::kDefinition);
    const BiPoly tut = tutte(s, TutteRoute::kDefinition);
    if (chi != fixtures::to_uni(oracle::characteristic(ranks))) out.fail(name + ": chi vs oracle");
    if (tut != fixtures::to_bi(oracle::tutte(ranks))) out.fail(name + ": T vs oracle");
    if (characteristic(s, CharRoute::kDeletionContraction) != chi) out.fail(name + ": chi DC");
    if (!s.has_loop()) {
      ++mobius;
      if (characteristic(s, CharRoute::kMobius) != chi) out.fail(name + ": chi Mobius");
    }
    if (tutte(s, TutteRoute::kDeletionContraction) != tut) out.fail(name + ": T DC");
    if (specialize_bi(tut, 1 - kT, UniPoly(), s.rank()) != chi) out.fail(name + ": chi vs T");
  }
  out.detail = std::to_string(corpus.size()) + " semimatroids, " + std::to_string(mobius) +
               " loopless via Mobius";
  return out;
}

// 3. NBC counts for five orderings each.
Outcome broken_circuits(const std::vector<NamedSemimatroid>& corpus) {
  Outcome out;
  CorpusRng rng(3);
  int checks = 0;
  for (const auto& [name, s] : corpus) {
    const UniPoly chi = characteristic(s);
    const WhitneySeq w = whitney_sequence(chi, s.rank());
    const oracle::Ranks ranks = fixtures::ranks_of(s);
    for (int k = 0; k < 5; ++k) {
      const std::vector<int> ordering = fixtures::random_ordering(s.ground(), rng);
      const BrokenCircuitContext ctx = broken_circuit_analysis(s, ordering);
      ++checks;
      if (ctx.nbc_counts != w) out.fail(name + ": NBC counts vs Whitney numbers");
      std::vector<std::int64_t> brute = oracle::nbc_counts(ranks, ordering);
      brute.resize(w.values.size(), 0);
      for (std::size_t i = 0; i < brute.size(); ++i) {
        if (BigInt(static_cast<long>(brute[i])) != ctx.nbc_counts.values[i]) {
          out.fail(name + ": NBC counts vs brute force");
        }
      }
      BigInt total = 0;
      for (const auto& v : ctx.nbc_counts.values) total += v;
      if (Rational(total) != Rational(sign_power(s.rank())) * chi.evaluate(-1)) {
        out.fail(name + ": NBC total vs chi(-1)");
      }
    }
  }
  out.detail = std::to_string(checks) + " orderings";
  return out;
}

// 4. compatible_family(induced_assigning(S)) = S.
Outcome round_trip(const std::vector<NamedSemimatroid>& corpus) {
  Outcome out;
  for (const auto& [name, s] : corpus) {
    const AssigningMatroid a = induced_assigning(s);
    if (compatible_family(a) != s.central_sets()) out.fail(name + ": family");
    if (to_semimatroid(a) != s) out.fail(name + ": ranks");
  }
  out.detail = std::to_string(corpus.size()) + " semimatroids";
  return out;
}

// 5. Multiplicative characteristic convolution and three Tutte variants.
Outcome convolutions(const std::vector<NamedSemimatroid>& corpus) {
  Outcome out;
  int ccf = 0;
  for (const auto& [name, s] : corpus) {
    if (!s.has_loop()) {
      ++ccf;
      if (!char_convolution(s).equal) out.fail(name + ": characteristic convolution");
    }
    for (auto v : {ConvolutionVariant::kTutteCentral, ConvolutionVariant::kTutteFlats,
                   ConvolutionVariant::kTutteCyclicFlats}) {
      const ConvolutionReport r = tutte_convolution(s, v);
      if (!r.equal || r.lhs != tutte(s)) out.fail(name + ": " + variant_name(v));
    }
  }
  out.detail = std::to_string(ccf) + " characteristic, " + std::to_string(corpus.size()) +
               " x 3 Tutte";
  return out;
}

// 6. Sign pattern, unimodality, log-concavity, comparison with M_C.
Outcome shapes(const std::vector<NamedSemimatroid>& corpus) {
  Outcome out;
  int tested = 0;
  for (const auto& [name, s] : corpus) {
    if (s.has_loop()) continue;
    ++tested;
    const WhitneySeq w = whitney_sequence(characteristic(s), s.rank());
    const ShapeReport shape = shape_report(w);
    if (!shape.alternating_nonzero) out.fail(name + ": sign pattern");
    if (!shape.unimodal) out.fail(name + ": unimodality");
    if (!shape.log_concave) out.fail(name + ": log-concavity");
    const Matroid m = rank_extension_matroid(s);
    const WhitneySeq wm = whitney_sequence(matroid_polynomials(m).chi, m.rank());
    if (!leq_pointwise(wm, w)) out.fail(name + ": w(M_C) <= w(C)");
  }
  out.detail = std::to_string(tested) + " loopless semimatroids";
  return out;
}

// 7. chi(N) = (t - 1) chi(S) for pointed matroids.
Outcome pointed() {
  Outcome out;
  const auto fixtures_list = fixtures::pointed_matroids(60, 7);
  for (const auto& [n, p] : fixtures_list) {
    const Semimatroid s = Semimatroid::from_pointed_matroid(n, p);
    const UniPoly lhs = matroid_polynomials(n).chi;
    if (lhs != (kT - 1) * characteristic(s)) out.fail("pointed at " + std::to_string(p));
    oracle::Ranks full;
    for (Subset x = 0; x <= n.ground(); ++x) full[x] = n.rank(x);
    if (lhs != fixtures::to_uni(oracle::characteristic(full))) out.fail("matroid chi vs oracle");
  }
  out.detail = std::to_string(fixtures_list.size()) + " pointed matroids";
  return out;
}

// 8. Arrangement identities on rational fixtures.
Outcome arrangement_suite() {
  Outcome out;
  const auto list = fixtures::arrangements(120, 8);
  CorpusRng rng(88);
  int comparisons = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Arrangement& a = list[i];
    const std::string name = "arrangement " + std::to_string(i);
    const oracle::Ranks ranks = oracle::arrangement_family(fixtures::int_arrangement(a));
    if (fixtures::ranks_of(central_family(a)) != ranks) out.fail(name + ": central family");

    const int shift = a.dim() - arrangement_rank(a);
    const ArrangementPolynomials p = arrangement_polynomials(a);
    const Semimatroid s = semimatroid_of(a);
    if (p.chi != t_power(shift) * characteristic(s)) out.fail(name + ": chi(A) vs chi(C)");
    if (p.chi != fixtures::to_uni(oracle::characteristic(ranks, shift))) {
      out.fail(name + ": chi(A) vs oracle");
    }
    if (p.chi_mobius && *p.chi_mobius != p.chi) out.fail(name + ": intersection poset chi");

    const HcfReport h = hcf(a);
    if (h.lhs != p.tutte || h.rhs_central != h.lhs || h.rhs_flats != h.lhs) {
      out.fail(name + ": Tutte convolution");
    }

    // Translations of the linear arrangement for the comparison statements.
    const Arrangement a_o = translate(a, Vector(a.size(), Rational(0)));
    const Matroid m = normal_matroid(a);
    std::vector<Vector> offsets = {Vector(a.size(), Rational(0)), Vector()};
    for (const auto& hp : a.hyperplanes()) offsets[1].push_back(hp.offset);
    for (int k = 0; k < 3; ++k) {
      Vector v;
      for (int e = 0; e < a.size(); ++e) v.emplace_back(static_cast<int>(rng() % 3) - 1);
      offsets.push_back(std::move(v));
    }
    struct Translated {
      std::vector<Subset> circuits;
      Assigning alpha;
      WhitneySeq w;
      WhitneySeq w_compatible;
    };
    std::vector<Translated> ts;
    for (const Vector& off : offsets) {
      const Semimatroid st = semimatroid_of(translate(a_o, off));
      const Assigning alpha = assigning_of_translation(a_o, off);
      const AssigningMatroid am(m, alpha);
      const UniPoly chi_c = compatible_polynomials(am).chi;
      ts.push_back({st.circuits(), alpha, whitney_sequence(characteristic(st), st.rank()),
                    whitney_sequence(chi_c, m.rank())});
      if (chi_c != characteristic(st)) out.fail(name + ": compatible chi vs semimatroid chi");
    }
    for (const auto& x : ts) {
      for (const auto& y : ts) {
        const std::set<Subset> cx(x.circuits.begin(), x.circuits.end());
        if (std::includes(cx.begin(), cx.end(), y.circuits.begin(), y.circuits.end())) {
          ++comparisons;
          if (!leq_pointwise(x.w, y.w)) out.fail(name + ": comparison (a)");
        }
        if (x.alpha.leq(y.alpha)) {
          ++comparisons;
          if (!leq_pointwise(x.w_compatible, y.w_compatible)) out.fail(name + ": comparison (b)");
        }
      }
    }

    // chi(A) = t^{n-r} chi(M_{A_o}, alpha_a), and the Mobius form of the latter.
    const AssigningMatroid am(m, ts[1].alpha);
    const UniPoly chi_c = compatible_polynomials(am).chi;
    if (p.chi != t_power(shift) * chi_c) out.fail(name + ": chi(A) vs compatible chi");
    const Semimatroid sc = to_semimatroid(am);
    if (!sc.has_loop() && characteristic(sc, CharRoute::kMobius) != chi_c) {
      out.fail(name + ": compatible chi Mobius form");
    }
  }
  out.detail = std::to_string(list.size()) + " arrangements, " + std::to_string(comparisons) +
               " comparable translation pairs";
  return out;
}

// 9. Classification of translations by strata of the discriminantal arrangement.
Outcome classification() {
  Outcome out;
  CorpusRng rng(99);
  int classified = 0;
  int skipped = 0;
  int translations = 0;
  for (const Arrangement& a : fixtures::arrangements(200, 9)) {
    if (classified >= 30) break;
    const Arrangement a_o = translate(a, Vector(a.size(), Rational(0)));
    std::vector<TranslationClass> classes;
    Arrangement delta = a_o;
    try {
      delta = discriminantal(a_o);
      classes = classify_translations(a_o);
    } catch (const LimitExceeded&) {
      ++skipped;
      continue;
    }
    ++classified;
    const std::string name = "central arrangement " + std::to_string(classified);
    const std::size_t lattice = intersection_lattice(delta).keys.size();
    if (classes.size() != lattice) out.fail(name + ": class count");
    std::map<Subset, const TranslationClass*> by_flat;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      by_flat[classes[i].flat] = &classes[i];
      for (std::size_t j = 0; j < i; ++j) {
        if (classes[i].semimatroid == classes[j].semimatroid) out.fail(name + ": repeated class");
      }
      if (stratum_of(delta, classes[i].representative) != classes[i].flat) {
        out.fail(name + ": representative off its stratum");
      }
    }
    struct Sample {
      Subset stratum;
      Semimatroid s;
      Assigning alpha;
    };
    std::vector<Sample> samples;
    for (int k = 0; k < 50; ++k) {
      Vector off;
      for (int e = 0; e < a.size(); ++e) off.emplace_back(static_cast<int>(rng() % 3) - 1);
      ++translations;
      const Subset x = stratum_of(delta, off);
      const Semimatroid s = semimatroid_of(translate(a_o, off));
      const Assigning alpha = assigning_of_translation(a_o, off, AssigningRoute::kAffineCircuits);
      if (assigning_of_translation(a_o, off, AssigningRoute::kCircuitVectors) != alpha) {
        out.fail(name + ": assigning routes differ");
      }
      const auto it = by_flat.find(x);
      if (it == by_flat.end()) {
        out.fail(name + ": stratum without a class");
        continue;
      }
      if (it->second->semimatroid != s || it->second->assigning != alpha) {
        out.fail(name + ": translation outside its class");
      }
      samples.push_back({x, s, alpha});
    }
    for (const auto& u : samples) {
      for (const auto& v : samples) {
        const bool same_s = u.s == v.s;
        if (same_s != (u.alpha == v.alpha) || same_s != (u.stratum == v.stratum)) {
          out.fail(name + ": equivalences disagree");
        }
      }
    }
  }
  if (classified < 20) out.fail("fewer than 20 central arrangements within caps");
  out.detail = std::to_string(classified) + " central arrangements, " +
               std::to_string(translations) + " translations, " + std::to_string(skipped) +
               " skipped at the hyperplane cap";
  return out;
}

// 10. Finite-field point and coloring counts against chi(q).
Outcome finite_fields() {
  Outcome out;
  int counted = 0;
  for (const Arrangement& a : fixtures::arrangements(120, 8)) {
    const oracle::IntArrangement ia = fixtures::int_arrangement(a);
    for (long q : {2L, 3L, 5L, 7L}) {
      const Arrangement r = reduce_mod(a, q);
      const BigInt points = count_points_finite_field(r);
      ++counted;
      if (points != BigInt(static_cast<long>(oracle::count_points(ia, q)))) {
        out.fail("point count vs brute force");
      }
      if (Rational(points) != arrangement_polynomials(r).chi.evaluate(q)) {
        out.fail("point count vs chi(q)");
      }
    }
  }
  for (const GraphInput& g : fixtures::graphs(60, 10)) {
    for (long q : {2L, 3L, 5L, 7L}) {
      const ColoringCount c = count_colorings(g.graph, g.orientation, g.gains, q);
      ++counted;
      const auto brute = oracle::count_colorings(g.graph.vertex_count, g.orientation,
                                                 fixtures::int_gains(g.gains), q);
      if (c.count != BigInt(static_cast<long>(brute))) out.fail("colorings vs brute force");
      const auto arr = graphic_arrangements(g.graph, g.orientation, g.gains, Field::prime(q));
      if (Rational(c.count) != arrangement_polynomials(arr.affinographic).chi.evaluate(q)) {
        out.fail("colorings vs chi(q)");
      }
    }
  }
  GraphInput tri;
  tri.graph = {3, {{0, 1}, {1, 2}, {0, 2}}};
  tri.orientation = tri.graph.edges;
  tri.gains = {Rational(1), Rational(0), Rational(0)};
  if (count_colorings(tri.graph, tri.orientation, tri.gains, 2).count != 2) {
    out.fail("triangle at q = 2");
  }
  const auto tri_arr = graphic_arrangements(tri.graph, tri.orientation, tri.gains);
  if (arrangement_polynomials(tri_arr.affinographic).chi !=
      UniPoly::from_descending({1, -3, 3, 0})) {
    out.fail("triangle polynomial");
  }
  out.detail = std::to_string(counted) + " counts plus the gain-(1,0,0) triangle";
  return out;
}

// 11. mu * delta(fg) * zeta = (mu * delta(f) * zeta) * (mu * delta(g) * zeta).
Outcome mobius_conjugation_suite(const std::vector<NamedSemimatroid>& corpus) {
  Outcome out;
  CorpusRng rng(11);
  auto random_poly = [&rng] {
    UniPoly p;
    for (int d = 0; d <= 2; ++d) p.add_term(d, BigInt(static_cast<long>(rng() % 7) - 3));
    return p;
  };
  int tested = 0;
  for (const auto& [name, s] : corpus) {
    const SemiFlatSemilattice lattice(s);
    const FinitePoset& poset = lattice.poset(false);
    if (poset.size() > 12) continue;
    ++tested;
    std::vector<UniPoly> f, g, fg;
    for (std::size_t i = 0; i < poset.size(); ++i) {
      f.push_back(random_poly());
      g.push_back(random_poly());
      fg.push_back(f.back() * g.back());
    }
    const auto lhs = mobius_conjugation<UniPoly>(fg, poset);
    const auto rhs = convolve(mobius_conjugation<UniPoly>(f, poset),
                              mobius_conjugation<UniPoly>(g, poset), poset);
    if (!(lhs == rhs)) out.fail(name + ": conjugation not multiplicative");
  }
  if (tested == 0) out.fail("no flat semilattice with at most 12 elements");
  out.detail = std::to_string(tested) + " flat semilattices";
  return out;
}

// 12. chi(G, alpha) = t^{c(G)} chi(M_G, alpha_{M_G}).
Outcome graph_identity() {
  Outcome out;
  CorpusRng rng(12);
  int tested = 0;
  for (const GraphInput& g : fixtures::graphs(60, 12)) {
    const std::vector<Subset> cyc = cycles(g.graph);
    std::vector<Assigning> labelings = {Assigning::constant(cyc, 0), Assigning::constant(cyc, 1)};
    const AssigningGraph admissible =
        admissible_assigning(g.graph, g.orientation, g.gains, AdmissibleRoute::kAffineCircuits);
    if (!(admissible_assigning(g.graph, g.orientation, g.gains, AdmissibleRoute::kGainSums)
              .labels == admissible.labels)) {
      out.fail("admissible routes differ");
    }
    labelings.push_back(admissible.labels);
    for (int k = 0; k < 2; ++k) {
      std::vector<std::pair<Subset, int>> labels;
      for (Subset c : cyc) labels.emplace_back(c, static_cast<int>(rng() % 2));
      labelings.emplace_back(labels);
    }
    const int c = components(g.graph, full_set(g.graph.edge_count()));
    for (const Assigning& alpha : labelings) {
      const AssigningGraph ag(g.graph, alpha);
      ++tested;
      if (compatible_chromatic(ag) != t_power(c) * compatible_polynomials(lift_assigning(ag)).chi) {
        out.fail("graph identity");
      }
    }
  }
  out.detail = std::to_string(tested) + " assigning graphs";
  return out;
}

}  // namespace

int main() {
  const auto& corpus = fixtures::semimatroid_corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"U(2,4) assigning rows", table1},
      {"route agreement", [&] { return route_agreement(corpus); }},
      {"broken circuit theorem", [&] { return broken_circuits(corpus); }},
      {"semimatroid inverse round trip", [&] { return round_trip(corpus); }},
      {"convolution formulas", [&] { return convolutions(corpus); }},
      {"shape suite", [&] { return shapes(corpus); }},
      {"pointed matroids", pointed},
      {"arrangement suite", arrangement_suite},
      {"classification of translations", classification},
      {"finite-field counting", finite_fields},
      {"Mobius conjugation", [&] { return mobius_conjugation_suite(corpus); }},
      {"graph identity", graph_identity},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::printf("[%s] %zu %s: %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs,
                o.ok ? "" : "; first failure: ", o.first_failure.c_str());
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}
