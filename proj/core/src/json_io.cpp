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

#include "semimat/json_io.hpp"

#include <charconv>

namespace semimat {

namespace {

std::string child(const std::string& path, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return path + "/" + escaped;
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const Json& member(const Json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) throw JsonInputError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw JsonInputError(path, "missing key \"" + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) throw JsonInputError(path, "expected an array");
  return j;
}

long long read_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw JsonInputError(path, "expected an integer");
  return j.get<long long>();
}

int read_small(const Json& j, const std::string& path, long long lo, long long hi) {
  const long long v = read_int(j, path);
  if (v < lo || v > hi) {
    throw JsonInputError(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) +
                                   ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

Subset parse_subset_text(const std::string& text, const std::string& path) {
  unsigned long long v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw JsonInputError(path, "bitmask \"" + text + "\" is not a decimal integer");
  }
  if (v >= (1ULL << kMaxGroundSize)) throw JsonInputError(path, "bitmask exceeds the 20-element cap");
  return static_cast<Subset>(v);
}

Subset read_subset(const Json& j, const std::string& path) {
  if (j.is_string()) return parse_subset_text(j.get<std::string>(), path);
  return static_cast<Subset>(read_small(j, path, 0, (1LL << kMaxGroundSize) - 1));
}

Rational read_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>())));
  if (!j.is_string()) throw JsonInputError(path, "expected a rational string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InvalidInput& e) {
    throw JsonInputError(path, e.what());
  }
}

Vector read_vector(const Json& j, const std::string& path) {
  Vector v;
  const Json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) v.push_back(read_rational(arr[i], child(path, i)));
  return v;
}

// Rethrows library errors with the JSON location attached.
template <class F>
auto located(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const JsonInputError&) {
    throw;
  } catch (const LimitExceeded&) {
    throw;
  } catch (const InvalidInput& e) {
    throw JsonInputError(path, e.what());
  }
}

Field read_field(const Json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object()) {
    const long long p = read_int(member(j, path, "Fp"), child(path, "Fp"));
    return located(path, [&] { return Field::prime(static_cast<long>(p)); });
  }
  throw JsonInputError(path, "field must be \"Q\" or {\"Fp\": p}");
}

Json field_json(const Field& f) {
  if (!f.is_prime()) return "Q";
  return Json{{"Fp", f.characteristic()}};
}

}  // namespace

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const auto& [d, c] : p.terms()) out.push_back(Json::array({d, c.get_str()}));
  return out;
}

Json to_json(const BiPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back(Json::array({Json::array({e.first, e.second}), c.get_str()}));
  }
  return out;
}

UniPoly uni_poly_from_json(const Json& j, const std::string& path) {
  UniPoly p;
  const Json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = child(path, i);
    if (!arr[i].is_array() || arr[i].size() != 2) throw JsonInputError(at, "expected [degree, coefficient]");
    const int d = read_small(arr[i][0], child(at, 0), 0, 1 << 20);
    const Rational c = read_rational(arr[i][1], child(at, 1));
    if (c.get_den() != 1) throw JsonInputError(child(at, 1), "coefficients must be integers");
    p.add_term(d, c.get_num());
  }
  return p;
}

Json subset_json(Subset x) { return std::to_string(x); }

Json rational_json(const Rational& x) { return rational_string(x); }

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

Matroid matroid_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw JsonInputError(path, "expected a matroid object");
  if (j.contains("uniform")) {
    const std::string at = child(path, "uniform");
    const Json& u = array_at(j["uniform"], at);
    if (u.size() != 2) throw JsonInputError(at, "expected [rank, size]");
    const int r = read_small(u[0], child(at, 0), 0, kMaxGroundSize);
    const int n = read_small(u[1], child(at, 1), 0, kMaxGroundSize);
    return located(at, [&] { return Matroid::uniform(r, n); });
  }
  if (j.contains("matrix")) {
    const std::string at = child(path, "matrix");
    const Json& m = j["matrix"];
    Field field = Field::rationals();
    const Json& f = member(m, at, "field");
    if (f.is_string() && f.get<std::string>() == "Fp") {
      const long long p = read_int(member(m, at, "p"), child(at, "p"));
      field = located(at, [&] { return Field::prime(static_cast<long>(p)); });
    } else {
      field = read_field(f, child(at, "field"));
    }
    const std::string cols_at = child(at, "columns");
    const Json& cols = array_at(member(m, at, "columns"), cols_at);
    std::vector<Vector> columns;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      Vector v = read_vector(cols[i], child(cols_at, i));
      const std::string col_at = child(cols_at, i);
      for (auto& x : v) x = located(col_at, [&] { return field.normalize(x); });
      columns.push_back(std::move(v));
    }
    return located(at, [&] { return Matroid::from_columns(columns, field); });
  }
  if (j.contains("graph")) {
    const GraphInput g = graph_from_json(j["graph"], child(path, "graph"));
    return located(path, [&] { return cycle_matroid(g.graph); });
  }
  const int n = read_small(member(j, path, "ground_size"), child(path, "ground_size"), 0,
                           kMaxGroundSize);
  const std::string rank_at = child(path, "rank");
  const Json& ranks = member(j, path, "rank");
  if (!ranks.is_object()) throw JsonInputError(rank_at, "expected an object of ranks");
  std::vector<int> table(std::size_t{1} << n, -1);
  for (const auto& [key, value] : ranks.items()) {
    const std::string at = child(rank_at, key);
    const Subset x = parse_subset_text(key, at);
    if (!is_subset(x, full_set(n))) throw JsonInputError(at, "subset outside the ground set");
    table[x] = read_small(value, at, 0, n);
  }
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (table[x] < 0) {
      throw JsonInputError(rank_at, "missing rank of subset " + std::to_string(x));
    }
  }
  return located(path, [&] { return Matroid::from_rank_table(n, table); });
}

Json to_json(const Matroid& m) {
  Json ranks = Json::object();
  const Subset ground = m.ground();
  for (Subset x = 0; x <= ground; ++x) {
    if (is_subset(x, ground)) ranks[std::to_string(x)] = m.rank(x);
  }
  Json out{{"ground_size", width(ground)}, {"rank", ranks}};
  if (ground != full_set(width(ground))) out["ground"] = subset_json(ground);
  return out;
}

RankedFamily ranked_family_from_json(const Json& j, const std::string& path) {
  RankedFamily f;
  const int n = read_small(member(j, path, "ground_size"), child(path, "ground_size"), 0,
                           kMaxGroundSize);
  f.ground = full_set(n);
  if (j.contains("ground")) {
    f.ground = read_subset(j["ground"], child(path, "ground"));
    if (!is_subset(f.ground, full_set(n))) {
      throw JsonInputError(child(path, "ground"), "ground mask wider than ground_size");
    }
  }
  const std::string central_at = child(path, "central");
  const Json& central = array_at(member(j, path, "central"), central_at);
  for (std::size_t i = 0; i < central.size(); ++i) {
    f.sets.push_back(read_subset(central[i], child(central_at, i)));
  }
  const std::string rank_at = child(path, "rank");
  const Json& ranks = member(j, path, "rank");
  if (!ranks.is_object()) throw JsonInputError(rank_at, "expected an object of ranks");
  for (const auto& [key, value] : ranks.items()) {
    const std::string at = child(rank_at, key);
    f.rank[parse_subset_text(key, at)] = read_small(value, at, -1000, 1000);
  }
  return f;
}

Semimatroid semimatroid_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw JsonInputError(path, "expected a semimatroid object");
  if (j.contains("pointed")) {
    const std::string at = child(path, "pointed");
    const Matroid n = matroid_from_json(member(j["pointed"], at, "matroid"), child(at, "matroid"));
    const int p = read_small(member(j["pointed"], at, "p"), child(at, "p"), 0, kMaxGroundSize - 1);
    return located(at, [&] { return Semimatroid::from_pointed_matroid(n, p); });
  }
  if (j.contains("central")) {
    const RankedFamily f = ranked_family_from_json(j, path);
    return located(path, [&] { return Semimatroid::create(f); });
  }
  return Semimatroid::from_matroid(matroid_from_json(j, path));
}

Json to_json(const RankedFamily& f) {
  Json central = Json::array();
  for (Subset x : f.sets) central.push_back(subset_json(x));
  Json ranks = Json::object();
  for (const auto& [x, r] : f.rank) ranks[std::to_string(x)] = r;
  Json out{{"ground_size", width(f.ground)}, {"central", central}, {"rank", ranks}};
  if (f.ground != full_set(width(f.ground))) out["ground"] = subset_json(f.ground);
  return out;
}

Json to_json(const Semimatroid& s) { return to_json(s.family()); }

AssigningMatroid assigning_matroid_from_json(const Json& j, const std::string& path) {
  Matroid m = matroid_from_json(member(j, path, "matroid"), child(path, "matroid"));
  const std::string at = child(path, "assigning");
  const Json& labels = member(j, path, "assigning");
  if (!labels.is_object()) throw JsonInputError(at, "expected an object of circuit labels");
  std::vector<std::pair<Subset, int>> pairs;
  for (const auto& [key, value] : labels.items()) {
    const std::string key_at = child(at, key);
    pairs.emplace_back(parse_subset_text(key, key_at), read_small(value, key_at, 0, 1));
  }
  return located(at, [&] { return AssigningMatroid(std::move(m), Assigning(std::move(pairs))); });
}

Json to_json(const Assigning& a) {
  Json out = Json::object();
  for (const auto& [c, v] : a.all()) out[std::to_string(c)] = v;
  return out;
}

Json to_json(const AssigningMatroid& a) {
  return Json{{"matroid", to_json(a.matroid())}, {"assigning", to_json(a.assigning())}};
}

Arrangement arrangement_from_json(const Json& j, const std::string& path) {
  const Field field = j.is_object() && j.contains("field")
                          ? read_field(j["field"], child(path, "field"))
                          : Field::rationals();
  const int dim = read_small(member(j, path, "dim"), child(path, "dim"), 0, 64);
  const std::string hs_at = child(path, "hyperplanes");
  const Json& hs = array_at(member(j, path, "hyperplanes"), hs_at);
  std::vector<Hyperplane> out;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string at = child(hs_at, i);
    Hyperplane h;
    h.normal = read_vector(member(hs[i], at, "normal"), child(at, "normal"));
    h.offset = hs[i].contains("offset") ? read_rational(hs[i]["offset"], child(at, "offset"))
                                        : Rational(0);
    if (static_cast<int>(h.normal.size()) != dim) {
      throw JsonInputError(child(at, "normal"), "normal length differs from dim");
    }
    out.push_back(std::move(h));
  }
  return located(path, [&] { return Arrangement(field, dim, std::move(out)); });
}

Json to_json(const Arrangement& a) {
  Json hs = Json::array();
  for (const auto& h : a.hyperplanes()) {
    hs.push_back(Json{{"normal", vector_json(h.normal)}, {"offset", rational_json(h.offset)}});
  }
  return Json{{"field", field_json(a.field())}, {"dim", a.dim()}, {"hyperplanes", hs}};
}

GraphInput graph_from_json(const Json& j, const std::string& path) {
  GraphInput g;
  const int n = read_small(member(j, path, "vertices"), child(path, "vertices"), 0, 64);
  g.graph.vertex_count = n;
  const std::string edges_at = child(path, "edges");
  const Json& edges = array_at(member(j, path, "edges"), edges_at);
  auto read_pair = [&](const Json& e, const std::string& at) {
    if (!e.is_array() || e.size() != 2) throw JsonInputError(at, "expected [u, v]");
    return std::make_pair(read_small(e[0], child(at, 0), 1, n) - 1,
                          read_small(e[1], child(at, 1), 1, n) - 1);
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    g.graph.edges.push_back(read_pair(edges[i], child(edges_at, i)));
  }
  located(path, [&] { g.graph.validate(); });
  if (j.contains("orientation")) {
    const std::string at = child(path, "orientation");
    const Json& arcs = array_at(j["orientation"], at);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      g.orientation.push_back(read_pair(arcs[i], child(at, i)));
    }
    located(at, [&] { check_orientation(g.graph, g.orientation); });
  } else {
    g.orientation = g.graph.edges;
  }
  if (j.contains("gains")) {
    const std::string at = child(path, "gains");
    g.gains = read_vector(j["gains"], at);
    if (g.gains.size() != g.graph.edges.size()) {
      throw JsonInputError(at, "gain vector length differs from the edge count");
    }
  } else {
    g.gains.assign(g.graph.edges.size(), Rational(0));
  }
  return g;
}

Json to_json(const GraphInput& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.graph.edges) edges.push_back(Json::array({u + 1, v + 1}));
  Json arcs = Json::array();
  for (const auto& [u, v] : g.orientation) arcs.push_back(Json::array({u + 1, v + 1}));
  return Json{{"vertices", g.graph.vertex_count},
              {"edges", edges},
              {"orientation", arcs},
              {"gains", vector_json(g.gains)}};
}

Json to_json(const WhitneySeq& w) {
  Json values = Json::array();
  for (const auto& v : w.values) values.push_back(v.get_str());
  return Json{{"rank", w.rank}, {"values", values}};
}

}  // namespace semimat
