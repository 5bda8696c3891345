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

#include "cli/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <vector>

#include "semimat/arrangement.hpp"
#include "semimat/assigning.hpp"
#include "semimat/convolution.hpp"
#include "semimat/corpus.hpp"
#include "semimat/graph.hpp"
#include "semimat/semimatroid.hpp"

namespace semimat::cli {

namespace {

// A failed precondition on the command line rather than the input document.
class UsageError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class Checks {
 public:
  explicit Checks(bool enabled) : enabled_(enabled) {}

  bool enabled() const { return enabled_; }
  void add(const std::string& name, bool passed) {
    if (!enabled_) return;
    all_passed_ = all_passed_ && passed;
    list_.push_back(Json{{"name", name}, {"passed", passed}});
  }
  // Lazily evaluated so that --no-check skips the work.
  void add(const std::string& name, const std::function<bool()>& check) {
    if (enabled_) add(name, check());
  }
  bool all_passed() const { return all_passed_; }
  Json json() const { return list_; }

 private:
  bool enabled_;
  bool all_passed_ = true;
  Json list_ = Json::array();
};

Json integer_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json poly_json(const UniPoly& p) {
  Json coefficients = Json::array();
  for (const auto& c : p.descending()) coefficients.push_back(integer_json(c));
  return Json{{"coefficients", coefficients}, {"text", p.to_string()}};
}

Json bipoly_json(const BiPoly& p) {
  return Json{{"terms", to_json(p)}, {"text", p.to_string()}};
}

Json subsets_json(const std::vector<Subset>& xs) {
  Json out = Json::array();
  for (Subset x : xs) out.push_back(subset_json(x));
  return out;
}

Json integers_json(const std::vector<BigInt>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(integer_json(x));
  return out;
}

long parse_long(const std::string& name, const std::string& text) {
  long v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError("option --" + name + " expects an integer, got \"" + text + "\"");
  }
  return v;
}

std::vector<int> parse_ordering(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(static_cast<int>(parse_long("ordering", item)));
  return out;
}

const std::map<std::string, std::set<std::string>>& verb_options() {
  static const std::map<std::string, std::set<std::string>> table = {
      {"verify", {}},
      {"chi", {}},
      {"tutte", {}},
      {"nbc", {"ordering"}},
      {"convolution", {}},
      {"assign", {}},
      {"arr-chi", {}},
      {"arr-tutte", {}},
      {"arr-classify", {}},
      {"arr-count", {"q"}},
      {"arr-discriminantal", {}},
      {"graph-chromatic", {}},
      {"graph-count", {"q"}},
      {"graph-admissible", {}},
      {"corpus-gen", {"seed", "count", "out"}},
  };
  return table;
}

bool has_key(const Json& j, const char* key) { return j.is_object() && j.contains(key); }

// A semimatroid given directly, by a matroid, an arrangement, a graph
// (through its affinographic arrangement) or an assigning matroid.
Semimatroid load_semimatroid(const Json& j) {
  if (has_key(j, "hyperplanes")) return semimatroid_of(arrangement_from_json(j));
  if (has_key(j, "vertices")) {
    const GraphInput g = graph_from_json(j);
    return semimatroid_of(graphic_arrangements(g.graph, g.orientation, g.gains).affinographic);
  }
  if (has_key(j, "assigning")) return to_semimatroid(assigning_matroid_from_json(j));
  return semimatroid_from_json(j);
}

void add_semimatroid_checks(const Semimatroid& s, const UniPoly& chi, Checks& checks) {
  checks.add("chi:definition=deletion-contraction",
             [&] { return characteristic(s, CharRoute::kDeletionContraction) == chi; });
  if (!s.has_loop()) {
    checks.add("chi:definition=mobius", [&] { return characteristic(s, CharRoute::kMobius) == chi; });
  }
  checks.add("chi=(-1)^r*T(1-t,0)", [&] {
    return specialize_bi(tutte(s), 1 - UniPoly::variable(), UniPoly(), s.rank()) == chi;
  });
  checks.add("broken-circuit-theorem", [&] {
    return broken_circuit_analysis(s, elements(s.ground())).nbc_counts ==
           whitney_sequence(chi, s.rank());
  });
}

Json verify(const Json& in, Checks& checks) {
  Json out;
  auto witness = [](const std::optional<AxiomCheck>& f) -> Json {
    if (!f) return nullptr;
    return Json{{"x", subset_json(f->x)}, {"y", subset_json(f->y)}};
  };
  if (has_key(in, "assigning")) {
    const AssigningMatroid a = assigning_matroid_from_json(in);
    const SemimatroidVerdict v = is_semimatroid(a);
    const std::vector<Subset> family = compatible_family(a);
    out["semimatroid"] = v.verdict;
    out["failing_axiom"] = v.failing_axiom ? Json(axiom_name(v.failing_axiom->axiom)) : Json();
    out["witness"] = witness(v.failing_axiom);
    out["compatible_family"] = subsets_json(family);
    out["compatible_chi"] = poly_json(compatible_polynomials(a).chi);
    if (v.verdict) {
      const Semimatroid s = to_semimatroid(a);
      checks.add("semimatroid-inverse",
                 [&] { return compatible_family(induced_assigning(s)) == family; });
      checks.add("compatible-chi=semimatroid-chi",
                 [&] { return compatible_polynomials(a).chi == characteristic(s); });
    }
    return out;
  }
  const RankedFamily f = ranked_family_from_json(in);
  const AxiomReport report = verify_axioms(f);
  const auto failure = report.first_failure();
  out["semimatroid"] = report.passed();
  out["failing_axiom"] = failure ? Json(axiom_name(failure->axiom)) : Json();
  out["witness"] = witness(failure);
  Json axioms = Json::object();
  for (const auto& c : report.checks) axioms[axiom_name(c.axiom)] = c.passed;
  out["axioms"] = axioms;
  return out;
}

Json chi_verb(const Json& in, Checks& checks) {
  Json out;
  if (has_key(in, "assigning")) {
    const AssigningMatroid a = assigning_matroid_from_json(in);
    const CompatiblePolynomials p = compatible_polynomials(a);
    out["chi"] = poly_json(p.chi);
    out["semimatroid"] = is_semimatroid(a).verdict;
    if (!out["semimatroid"].get<bool>()) return out;
    const Semimatroid s = to_semimatroid(a);
    out["rank"] = s.rank();
    checks.add("compatible-chi=semimatroid-chi", characteristic(s) == p.chi);
    add_semimatroid_checks(s, p.chi, checks);
    return out;
  }
  const Semimatroid s = load_semimatroid(in);
  const UniPoly chi = characteristic(s);
  out["chi"] = poly_json(chi);
  out["rank"] = s.rank();
  out["loopless"] = !s.has_loop();
  add_semimatroid_checks(s, chi, checks);
  if (!s.has_loop()) checks.add("semi-ccf", [&] { return char_convolution(s).equal; });
  return out;
}

Json tutte_verb(const Json& in, Checks& checks) {
  const Semimatroid s = load_semimatroid(in);
  const BiPoly t = tutte(s);
  Json out{{"tutte", bipoly_json(t)}, {"rank", s.rank()}};
  checks.add("tutte:definition=deletion-contraction",
             [&] { return tutte(s, TutteRoute::kDeletionContraction) == t; });
  for (auto v : {ConvolutionVariant::kTutteCentral, ConvolutionVariant::kTutteFlats,
                 ConvolutionVariant::kTutteCyclicFlats}) {
    checks.add("semi-tcf:" + variant_name(v), [&] { return tutte_convolution(s, v).equal; });
  }
  checks.add("chi=(-1)^r*T(1-t,0)", [&] {
    return specialize_bi(t, 1 - UniPoly::variable(), UniPoly(), s.rank()) == characteristic(s);
  });
  return out;
}

Json nbc_verb(const Json& in, const Command& cmd, Checks& checks) {
  const Semimatroid s = load_semimatroid(in);
  const auto it = cmd.options.find("ordering");
  const std::vector<int> ordering =
      it == cmd.options.end() ? elements(s.ground()) : parse_ordering(it->second);
  const BrokenCircuitContext ctx = broken_circuit_analysis(s, ordering);
  const UniPoly chi = characteristic(s);
  Json out{{"ordering", ordering},
           {"broken_circuits", subsets_json(ctx.broken_circuits)},
           {"nbc_counts", integers_json(ctx.nbc_counts.values)},
           {"chi", poly_json(chi)}};
  checks.add("broken-circuit-theorem", ctx.nbc_counts == whitney_sequence(chi, s.rank()));
  checks.add("nbc-total=(-1)^r*chi(-1)", [&] {
    BigInt total = 0;
    for (const auto& v : ctx.nbc_counts.values) total += v;
    return Rational(total) == Rational(sign_power(s.rank())) * chi.evaluate(-1);
  });
  return out;
}

Json convolution_verb(const Json& in, Checks& checks) {
  const Semimatroid s = load_semimatroid(in);
  std::vector<ConvolutionReport> reports;
  if (!s.has_loop()) reports.push_back(char_convolution(s));
  for (auto v : {ConvolutionVariant::kTutteCentral, ConvolutionVariant::kTutteFlats,
                 ConvolutionVariant::kTutteCyclicFlats}) {
    reports.push_back(tutte_convolution(s, v));
  }
  Json variants = Json::array();
  for (const auto& r : reports) {
    variants.push_back(Json{{"variant", variant_name(r.variant)},
                            {"lhs", bipoly_json(r.lhs)},
                            {"rhs", bipoly_json(r.rhs)},
                            {"equal", r.equal}});
    checks.add(r.variant == ConvolutionVariant::kCharTs ? "semi-ccf"
                                                        : "semi-tcf:" + variant_name(r.variant),
               r.equal);
  }
  return Json{{"variants", variants}, {"loopless", !s.has_loop()}};
}

Vector offsets_of(const Arrangement& a) {
  Vector v;
  for (const auto& h : a.hyperplanes()) v.push_back(h.offset);
  return v;
}

Arrangement linear_part(const Arrangement& a) {
  return translate(a, Vector(a.size(), Rational(0)));
}

Json assign_verb(const Json& in, Checks& checks) {
  if (has_key(in, "hyperplanes")) {
    const Arrangement a = arrangement_from_json(in);
    const Arrangement a_o = linear_part(a);
    const Assigning alpha = assigning_of_translation(a_o, offsets_of(a));
    const AssigningMatroid am(normal_matroid(a), alpha);
    const UniPoly chi = compatible_polynomials(am).chi;
    checks.add("assigning:affine-circuits=circuit-vectors", [&] {
      return assigning_of_translation(a_o, offsets_of(a), AssigningRoute::kCircuitVectors) ==
             alpha;
    });
    checks.add("compatible-family=central-sets",
               [&] { return compatible_family(am) == semimatroid_of(a).central_sets(); });
    checks.add("chi(A)=t^(n-r)*chi(M,alpha)", [&] {
      return arrangement_polynomials(a).chi ==
             UniPoly::monomial(a.dim() - arrangement_rank(a)) * chi;
    });
    return Json{{"assigning_matroid", to_json(am)},
                {"compatible_family", subsets_json(compatible_family(am))},
                {"compatible_chi", poly_json(chi)}};
  }
  const Semimatroid s = load_semimatroid(in);
  const AssigningMatroid am = induced_assigning(s);
  checks.add("semimatroid-inverse", [&] { return compatible_family(am) == s.central_sets(); });
  checks.add("compatible-chi=semimatroid-chi",
             [&] { return compatible_polynomials(am).chi == characteristic(s); });
  return Json{{"assigning_matroid", to_json(am)},
              {"compatible_chi", poly_json(compatible_polynomials(am).chi)}};
}

Json arr_chi(const Json& in, Checks& checks) {
  const Arrangement a = arrangement_from_json(in);
  const ArrangementPolynomials p = arrangement_polynomials(a);
  const int r = arrangement_rank(a);
  Json out{{"chi", poly_json(p.chi)}, {"rank", r}, {"dim", a.dim()}, {"central", a.is_central()}};
  if (p.chi_mobius) checks.add("chi:definition=intersection-poset", *p.chi_mobius == p.chi);
  checks.add("chi(A)=t^(n-r)*chi(C)", [&] {
    return p.chi == UniPoly::monomial(a.dim() - r) * characteristic(semimatroid_of(a));
  });
  checks.add("chi(A)=(-1)^r*t^(n-r)*T(1-t,0)", [&] {
    return p.chi == UniPoly::monomial(a.dim() - r) *
                        specialize_bi(p.tutte, 1 - UniPoly::variable(), UniPoly(), r);
  });
  if (a.field().is_prime()) {
    checks.add("chi(A;p)=point-count", [&] {
      try {
        return Rational(count_points_finite_field(a)) ==
               p.chi.evaluate(Rational(a.field().characteristic()));
      } catch (const LimitExceeded&) {
        return true;  // out of budget: nothing to compare
      }
    });
  }
  return out;
}

Json arr_tutte(const Json& in, Checks& checks) {
  const Arrangement a = arrangement_from_json(in);
  const ArrangementPolynomials p = arrangement_polynomials(a);
  Json out{{"tutte", bipoly_json(p.tutte)}, {"rank", arrangement_rank(a)}};
  if (checks.enabled()) {
    const HcfReport h = hcf(a);
    checks.add("hcf:central-sets", h.rhs_central == p.tutte && h.lhs == p.tutte);
    checks.add("hcf:flats", h.rhs_flats == p.tutte);
  }
  return out;
}

Json arr_classify(const Json& in, Checks& checks) {
  const Arrangement a = arrangement_from_json(in);
  const Arrangement a_o = linear_part(a);
  const Arrangement delta = discriminantal(a_o);
  const std::vector<TranslationClass> classes = classify_translations(a_o);
  Json list = Json::array();
  for (const auto& c : classes) {
    list.push_back(Json{{"flat", subset_json(c.flat)},
                        {"representative", vector_json(c.representative)},
                        {"assigning", to_json(c.assigning)},
                        {"chi", poly_json(characteristic(c.semimatroid))}});
  }
  checks.add("class-count=|L(delta)|",
             [&] { return classes.size() == intersection_lattice(delta).keys.size(); });
  checks.add("classes-distinct", [&] {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (classes[i].semimatroid == classes[j].semimatroid) return false;
        if (classes[i].assigning == classes[j].assigning) return false;
      }
    }
    return true;
  });
  checks.add("representatives-on-strata", [&] {
    for (const auto& c : classes) {
      if (stratum_of(delta, c.representative) != c.flat) return false;
      if (semimatroid_of(translate(a_o, c.representative)) != c.semimatroid) return false;
    }
    return true;
  });
  const Subset own = stratum_of(delta, offsets_of(a));
  return Json{{"class_count", classes.size()},
              {"classes", list},
              {"discriminantal", to_json(delta)},
              {"input_stratum", subset_json(own)}};
}

Json arr_count(const Json& in, const Command& cmd, Checks& checks) {
  Arrangement a = arrangement_from_json(in);
  const auto it = cmd.options.find("q");
  if (it != cmd.options.end()) {
    const long q = parse_long("q", it->second);
    if (a.field().is_prime() && a.field().characteristic() != q) {
      throw UsageError("--q differs from the arrangement's field");
    }
    if (!a.field().is_prime()) a = reduce_mod(a, q);
  }
  if (!a.field().is_prime()) throw UsageError("a rational arrangement needs --q");
  const BigInt points = count_points_finite_field(a);
  const long q = a.field().characteristic();
  const UniPoly chi = arrangement_polynomials(a).chi;
  checks.add("point-count=chi(q)", Rational(points) == chi.evaluate(Rational(q)));
  return Json{{"q", q}, {"points", integer_json(points)}, {"chi", poly_json(chi)}};
}

Json arr_discriminantal(const Json& in, Checks& checks) {
  const Arrangement a_o = linear_part(arrangement_from_json(in));
  const std::vector<CircuitVector> vectors = circuit_vectors(a_o);
  Json list = Json::array();
  for (const auto& v : vectors) {
    list.push_back(Json{{"circuit", subset_json(v.circuit)},
                        {"coefficients", vector_json(v.coefficients)}});
  }
  const Arrangement delta = discriminantal(a_o);
  checks.add("circuit-vectors-annihilate-normals", [&] {
    for (const auto& v : vectors) {
      for (int j = 0; j < a_o.dim(); ++j) {
        Rational acc = 0;
        for (int e = 0; e < a_o.size(); ++e) acc += v.coefficients[e] * a_o[e].normal[j];
        if (a_o.field().normalize(acc) != 0) return false;
      }
    }
    return true;
  });
  return Json{{"circuit_vectors", list}, {"discriminantal", to_json(delta)}};
}

Json graph_chromatic(const Json& in, Checks& checks) {
  const GraphInput g = graph_from_json(in);
  const AssigningGraph ag = admissible_assigning(g.graph, g.orientation, g.gains);
  const UniPoly chi = compatible_chromatic(ag);
  const int c = components(g.graph, full_set(g.graph.edge_count()));
  checks.add("admissible:affine-circuits=gain-sums", [&] {
    return admissible_assigning(g.graph, g.orientation, g.gains, AdmissibleRoute::kGainSums)
               .labels == ag.labels;
  });
  checks.add("chi(G,alpha)=t^c*chi(M_G,alpha)", [&] {
    return chi == UniPoly::monomial(c) * compatible_polynomials(lift_assigning(ag)).chi;
  });
  checks.add("chi(G,alpha)=chi(A_G)", [&] {
    const auto arr = graphic_arrangements(g.graph, g.orientation, g.gains);
    return arrangement_polynomials(arr.affinographic).chi == chi;
  });
  return Json{{"chromatic", poly_json(chi)},
              {"cycles", subsets_json(cycles(g.graph))},
              {"assigning", to_json(ag.labels)},
              {"components", c}};
}

Json graph_count(const Json& in, const Command& cmd, Checks& checks) {
  const GraphInput g = graph_from_json(in);
  const auto it = cmd.options.find("q");
  if (it == cmd.options.end()) throw UsageError("graph-count needs --q");
  const long q = parse_long("q", it->second);
  const ColoringCount count = count_colorings(g.graph, g.orientation, g.gains, q);
  checks.add("colorings=chi(A_G;q)", [&] {
    const auto arr = graphic_arrangements(g.graph, g.orientation, g.gains, Field::prime(q));
    return Rational(count.count) == arrangement_polynomials(arr.affinographic).chi.evaluate(q);
  });
  return Json{{"q", q}, {"colorings", integer_json(count.count)}, {"warnings", count.warnings}};
}

Json graph_admissible(const Json& in, Checks& checks) {
  const GraphInput g = graph_from_json(in);
  const AssigningGraph ag = admissible_assigning(g.graph, g.orientation, g.gains);
  Json list = Json::array();
  for (Subset c : cycles(g.graph)) {
    list.push_back(Json{{"cycle", subset_json(c)},
                        {"gain_sum", rational_json(cycle_gain_sum(g.graph, g.orientation,
                                                                  g.gains, c))},
                        {"label", ag.labels.label(c)}});
  }
  checks.add("admissible:affine-circuits=gain-sums", [&] {
    return admissible_assigning(g.graph, g.orientation, g.gains, AdmissibleRoute::kGainSums)
               .labels == ag.labels;
  });
  return Json{{"cycles", list}};
}

Json corpus_verb(const Command& cmd) {
  auto option = [&](const char* name, long fallback) {
    const auto it = cmd.options.find(name);
    return it == cmd.options.end() ? fallback : parse_long(name, it->second);
  };
  const long seed = option("seed", 1);
  const long count = option("count", 10);
  if (count < 0 || count > 100000) throw UsageError("--count must lie in [0, 100000]");
  const std::vector<CorpusItem> items = corpus_gen(static_cast<std::uint64_t>(seed),
                                                   static_cast<int>(count));
  const auto out_it = cmd.options.find("out");
  Json out{{"seed", seed}, {"count", count}};
  if (out_it == cmd.options.end()) {
    Json list = Json::array();
    for (const auto& item : items) {
      list.push_back(Json{{"kind", item.kind}, {"name", item.name}, {"fixture", item.json}});
    }
    out["items"] = list;
    return out;
  }
  const std::filesystem::path dir(out_it->second);
  std::filesystem::create_directories(dir);
  Json files = Json::array();
  for (const auto& item : items) {
    const std::filesystem::path file = dir / (item.name + ".json");
    std::ofstream stream(file, std::ios::binary);
    stream << render(item.json);
    if (!stream) throw UsageError("cannot write " + file.string());
    files.push_back(file.string());
  }
  out["files"] = files;
  return out;
}

Json dispatch(const Command& cmd, const Json& in, Checks& checks) {
  const std::string& v = cmd.verb;
  if (v == "verify") return verify(in, checks);
  if (v == "chi") return chi_verb(in, checks);
  if (v == "tutte") return tutte_verb(in, checks);
  if (v == "nbc") return nbc_verb(in, cmd, checks);
  if (v == "convolution") return convolution_verb(in, checks);
  if (v == "assign") return assign_verb(in, checks);
  if (v == "arr-chi") return arr_chi(in, checks);
  if (v == "arr-tutte") return arr_tutte(in, checks);
  if (v == "arr-classify") return arr_classify(in, checks);
  if (v == "arr-count") return arr_count(in, cmd, checks);
  if (v == "arr-discriminantal") return arr_discriminantal(in, checks);
  if (v == "graph-chromatic") return graph_chromatic(in, checks);
  if (v == "graph-count") return graph_count(in, cmd, checks);
  if (v == "graph-admissible") return graph_admissible(in, checks);
  throw UsageError("unknown verb \"" + v + "\"");
}

Result error_result(int code, const std::string& kind, const std::string& message,
                    const std::string& path = "") {
  Json err{{"kind", kind}, {"message", message}};
  if (!path.empty()) err["path"] = path;
  return Result{code, Json{{"error", err}}};
}

void validate_options(const Command& cmd) {
  const auto& table = verb_options();
  const auto it = table.find(cmd.verb);
  if (it == table.end()) throw UsageError("unknown verb \"" + cmd.verb + "\"");
  for (const auto& [name, value] : cmd.options) {
    if (name == "no-check") continue;
    if (!it->second.contains(name)) {
      throw UsageError("option --" + name + " does not apply to " + cmd.verb);
    }
  }
}

template <class F>
Result guarded(F&& body) {
  try {
    return body();
  } catch (const Json::parse_error& e) {
    return error_result(kExitInputError, "parse", e.what());
  } catch (const JsonInputError& e) {
    return error_result(kExitInputError, "input", e.what(), e.path());
  } catch (const UsageError& e) {
    return error_result(kExitInputError, "usage", e.what());
  } catch (const InvalidInput& e) {
    return error_result(kExitInputError, "input", e.what());
  } catch (const LimitExceeded& e) {
    return error_result(kExitLimit, "limit", e.what());
  } catch (const Json::exception& e) {
    return error_result(kExitInputError, "input", e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return error_result(kExitInputError, "io", e.what());
  }
}

}  // namespace

Result run_on(const Command& command, const std::string& input_text) {
  return guarded([&] {
    validate_options(command);
    const bool check = !command.options.contains("no-check");
    if (command.verb == "corpus-gen") return Result{kExitOk, corpus_verb(command)};
    const Json in = Json::parse(input_text);
    Checks checks(check);
    Json out = dispatch(command, in, checks);
    out["verb"] = command.verb;
    out["checks"] = checks.json();
    return Result{checks.all_passed() ? kExitOk : kExitCheckFailed, out};
  });
}

Result run(const Command& command) {
  if (command.verb == "corpus-gen") return run_on(command, "");
  std::string text;
  if (command.input_path.empty() || command.input_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream stream(command.input_path, std::ios::binary);
    if (!stream) {
      return error_result(kExitInputError, "io", "cannot read " + command.input_path);
    }
    text.assign(std::istreambuf_iterator<char>(stream), std::istreambuf_iterator<char>());
  }
  return run_on(command, text);
}

std::string render(const Json& output) { return output.dump(2) + "\n"; }

}  // namespace semimat::cli
