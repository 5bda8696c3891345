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

#ifndef SEMIMAT_JSON_IO_HPP_
#define SEMIMAT_JSON_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "semimat/arrangement.hpp"
#include "semimat/assigning.hpp"
#include "semimat/graph.hpp"
#include "semimat/matroid.hpp"
#include "semimat/numbers.hpp"
#include "semimat/polynomial.hpp"
#include "semimat/semimatroid.hpp"

namespace semimat {

using Json = nlohmann::json;

// Malformed JSON input. `path` is a JSON pointer to the offending value.
class JsonInputError : public InvalidInput {
 public:
  JsonInputError(const std::string& path, const std::string& message)
      : InvalidInput("at " + (path.empty() ? std::string("/") : path) + ": " + message),
        path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// [[degree, "coefficient"], ...] in increasing degree.
Json to_json(const UniPoly& p);
// [[[t_degree, s_degree], "coefficient"], ...] in increasing exponent order.
Json to_json(const BiPoly& p);
UniPoly uni_poly_from_json(const Json& j, const std::string& path = "");

Json subset_json(Subset x);
Json rational_json(const Rational& x);
Json vector_json(const Vector& v);

// {"ground_size", "rank"} or a shorthand: {"uniform": [r, n]},
// {"matrix": {"field", "p", "columns"}}, {"graph": <graph>}.
Matroid matroid_from_json(const Json& j, const std::string& path = "");
Json to_json(const Matroid& m);

// {"ground_size", "central", "rank"}, a matroid, or
// {"pointed": {"matroid": <matroid>, "p": element}}.
Semimatroid semimatroid_from_json(const Json& j, const std::string& path = "");
// Unvalidated triple from the {"ground_size", "central", "rank"} form.
RankedFamily ranked_family_from_json(const Json& j, const std::string& path = "");
Json to_json(const Semimatroid& s);
Json to_json(const RankedFamily& f);

// {"matroid": <matroid>, "assigning": {"<circuit>": 0|1}}.
AssigningMatroid assigning_matroid_from_json(const Json& j, const std::string& path = "");
Json to_json(const Assigning& a);
Json to_json(const AssigningMatroid& a);

// {"field": "Q" | {"Fp": p}, "dim": n, "hyperplanes": [{"normal", "offset"}]}.
Arrangement arrangement_from_json(const Json& j, const std::string& path = "");
Json to_json(const Arrangement& a);

// Vertices are 1-based in JSON and 0-based in memory.
struct GraphInput {
  MultiGraph graph;
  Orientation orientation;  // defaults to the listed endpoint order
  GainVector gains;         // defaults to zero
};

GraphInput graph_from_json(const Json& j, const std::string& path = "");
Json to_json(const GraphInput& g);

Json to_json(const WhitneySeq& w);

}  // namespace semimat

#endif  // SEMIMAT_JSON_IO_HPP_
