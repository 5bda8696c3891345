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

#include <gtest/gtest.h>

#include "semimat/corpus.hpp"
#include "support/fixtures.hpp"

namespace semimat {
namespace {

TEST(JsonIoTest, PolynomialEncoding) {
  const UniPoly p = UniPoly::from_descending({1, -4, 6});
  EXPECT_EQ(to_json(p).dump(), R"([[0,"6"],[1,"-4"],[2,"1"]])");
  EXPECT_EQ(uni_poly_from_json(to_json(p)), p);
  EXPECT_EQ(to_json(BiPoly::t() * BiPoly::s() - 1).dump(), R"([[[0,0],"-1"],[[1,1],"1"]])");
}

TEST(JsonIoTest, MatroidForms) {
  EXPECT_EQ(matroid_from_json(Json::parse(R"({"uniform":[2,4]})")), Matroid::uniform(2, 4));
  const Matroid u = Matroid::uniform(1, 3);
  EXPECT_EQ(matroid_from_json(to_json(u)), u);
  const Json matrix = Json::parse(R"({"matrix":{"field":"Q","columns":[["1","0"],[0,1],["1/2","1/2"]]}})");
  EXPECT_EQ(matroid_from_json(matrix), Matroid::uniform(2, 3));
  const Json fp = Json::parse(R"({"matrix":{"field":"Fp","p":2,"columns":[[1,1],[3,3]]}})");
  EXPECT_EQ(matroid_from_json(fp).rank(), 1);
  const Json graph = Json::parse(R"({"graph":{"vertices":3,"edges":[[1,2],[2,3],[1,3]]}})");
  EXPECT_EQ(matroid_from_json(graph), Matroid::uniform(2, 3));
}

TEST(JsonIoTest, SemimatroidForms) {
  const Semimatroid s = to_semimatroid(fixtures::table1_row({2}));
  EXPECT_EQ(semimatroid_from_json(to_json(s)), s);
  const Json pointed = Json::parse(R"({"pointed":{"matroid":{"uniform":[2,3]},"p":2}})");
  EXPECT_EQ(semimatroid_from_json(pointed).central_sets(), (std::vector<Subset>{0, 1, 2}));
  const Semimatroid restricted = s.restrict_to(0b0110);
  EXPECT_EQ(semimatroid_from_json(to_json(restricted)), restricted);
}

TEST(JsonIoTest, ArrangementsAndGraphs) {
  CorpusRng rng(3);
  for (int i = 0; i < 10; ++i) {
    const Arrangement a = random_arrangement(rng);
    EXPECT_EQ(arrangement_from_json(to_json(a)), a);
    const GraphInput g = random_graph(rng);
    const GraphInput back = graph_from_json(to_json(g));
    EXPECT_EQ(back.graph.edges, g.graph.edges);
    EXPECT_EQ(back.orientation, g.orientation);
    EXPECT_EQ(back.gains, g.gains);
    const AssigningMatroid am = random_assigning_matroid(rng);
    EXPECT_EQ(assigning_matroid_from_json(to_json(am)), am);
  }
  const Json fp = Json::parse(R"({"field":{"Fp":5},"dim":1,"hyperplanes":[{"normal":[7],"offset":"1/2"}]})");
  const Arrangement a = arrangement_from_json(fp);
  EXPECT_EQ(a[0].normal[0], 2);
  EXPECT_EQ(a[0].offset, 3);
  const GraphInput g = graph_from_json(Json::parse(R"({"vertices":2,"edges":[[1,2]]})"));
  EXPECT_EQ(g.orientation, (Orientation{{0, 1}}));
  EXPECT_EQ(g.gains, (GainVector{Rational(0)}));
}

std::string error_path(const std::function<void()>& f) {
  try {
    f();
  } catch (const JsonInputError& e) {
    return e.path();
  }
  return "<no error>";
}

TEST(JsonIoTest, ErrorsCarryPaths) {
  EXPECT_EQ(error_path([] { matroid_from_json(Json::parse(R"({"uniform":[2]})")); }), "/uniform");
  EXPECT_EQ(error_path([] {
              arrangement_from_json(
                  Json::parse(R"({"dim":1,"hyperplanes":[{"normal":[1]},{"normal":["x"]}]})"));
            }),
            "/hyperplanes/1/normal/0");
  EXPECT_EQ(error_path([] { graph_from_json(Json::parse(R"({"vertices":2,"edges":[[1,3]]})")); }),
            "/edges/0/1");
  EXPECT_EQ(error_path([] {
              semimatroid_from_json(Json::parse(R"({"ground_size":1,"central":["0","1"],"rank":{"0":0,"1":1,"x":0}})"));
            }),
            "/rank/x");
  EXPECT_EQ(error_path([] {
              semimatroid_from_json(Json::parse(R"({"ground_size":2,"central":["0","3"],"rank":{"0":0,"3":1}})"));
            }),
            "");
  EXPECT_EQ(error_path([] { matroid_from_json(Json::parse(R"({"ground_size":1,"rank":{"0":0}})")); }),
            "/rank");
}

}  // namespace
}  // namespace semimat
