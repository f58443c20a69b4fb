// Copyright 2026 The circov Authors
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

#include "circov/json_io.hpp"

#include <gtest/gtest.h>

#include "circov/error.hpp"

namespace circov::io {
namespace {

TEST(JsonTest, Rationals) {
  EXPECT_EQ(json_of(Rat(2, 3)).dump(), "\"2/3\"");
  EXPECT_EQ(json_of(Rat(4, 2)).dump(), "\"2\"");
  EXPECT_EQ(json_of(Rat(-1, 6)).dump(), "\"-1/6\"");
  EXPECT_EQ(rat_from_json(Json("94/3")), Rat(94, 3));
  EXPECT_EQ(rat_from_json(Json(5)), Rat(5));
  EXPECT_THROW(rat_from_json(Json("1/0")), InputError);
  EXPECT_THROW(rat_from_json(Json(0.5)), InputError);
  EXPECT_THROW(rat_from_json(Json::array()), InputError);
}

TEST(JsonTest, BinMatrix) {
  const Json j = json_of(contract(Circulant(7, 3), IndexSet{1, 4}));
  EXPECT_EQ(j["n_cols"], 5);
  EXPECT_EQ(j["col_labels"], Json({2, 3, 5, 6, 7}));
  EXPECT_EQ(j["rows"][0], "11000");
  EXPECT_EQ(j["rows"].size(), 5U);
}

TEST(JsonTest, MinorSpecFields) {
  const MinorSpec s = *minor_from_N(Circulant(7, 3), IndexSet{1, 4});
  const Json j = json_of(s);
  EXPECT_EQ(j["base"], Json({{"n", 7}, {"k", 3}}));
  EXPECT_EQ(j["N"], Json({1, 4}));
  EXPECT_EQ(j["W"], Json({1}));
  for (const char* key : {"d", "n1", "n2", "n3"}) EXPECT_EQ(j[key], 1) << key;
  EXPECT_EQ(j["n_prime"], 5);
  EXPECT_EQ(j["k_prime"], 2);
}

TEST(JsonTest, IneqRoundTrip) {
  const MinorSpec s = *minor_from_N(Circulant(7, 3), IndexSet{1, 4});
  const Ineq q = rminor_inequality(s, 1);
  const Json j = json_of(q);
  EXPECT_EQ(j.dump(),
            R"({"coeffs":[2,1,1,1,1,1,1],"rhs":3,"sense":">=","origin":{"kind":"rminor","W":[1],"r":1}})");
  const Ineq back = ineq_from_json(Json::parse(j.dump()), 7);
  EXPECT_TRUE(back.same_as(q));
  EXPECT_EQ(back.origin().kind, IneqKind::kRMinor);
  EXPECT_EQ(back.origin().W, IndexSet{1});
  EXPECT_THROW(ineq_from_json(j, 8), InputError);

  Json le = j;
  le["sense"] = "<=";
  EXPECT_THROW(ineq_from_json(le, 7), InputError);
  EXPECT_EQ(json_of(rank_inequality(Circulant(7, 3)))["origin"]["kind"], "rank");
}

TEST(JsonTest, Points) {
  const RatVec x = point_from_json(Json::parse(R"(["1/3", 0, "1"])"), 3);
  EXPECT_EQ(x(0), Rat(1, 3));
  EXPECT_EQ(x(1), Rat(0));
  EXPECT_THROW(point_from_json(Json::parse(R"(["1/3"])"), 3), InputError);
  EXPECT_THROW(point_from_json(Json::parse(R"({"x": 1})"), 1), InputError);
}

TEST(JsonTest, IndexLists) {
  EXPECT_EQ(index_lists_from_json(Json::parse("[[1,4],[2]]")),
            (std::vector<std::vector<int>>{{1, 4}, {2}}));
  EXPECT_EQ(index_lists_from_json(Json::parse("[1,4]")), (std::vector<std::vector<int>>{{1, 4}}));
  EXPECT_THROW(index_lists_from_json(Json::parse(R"(["a"])")), InputError);
}

TEST(JsonTest, Vertex) {
  const Json j = json_of(*allones_vertex(Circulant(7, 3)));
  EXPECT_EQ(j["provenance"], "allones");
  EXPECT_EQ(j["point"][0], "1/3");
}

TEST(JsonTest, SeparationResult) {
  EXPECT_EQ(json_of(std::optional<SepResult>{}).dump(), R"({"violated":false})");
  const auto found = separate(Circulant(7, 3), RatVec::Constant(7, Rat(1, 3)));
  const Json j = json_of(found);
  EXPECT_EQ(j["violated"], true);
  EXPECT_EQ(j["W"], Json({1}));
  EXPECT_EQ(j["p"], 1);
  EXPECT_EQ(j["r"], 1);
  EXPECT_EQ(j["violation"], "1/3");
  EXPECT_EQ(j["ineq"]["rhs"], 3);
}

TEST(JsonTest, VerifyReport) {
  VerifyReport r;
  r.valid = true;
  r.min = 3;
  r.argmin = 0b1001001;
  r.facet = std::nullopt;
  r.tight_count = 14;
  EXPECT_EQ(json_of(r, 7).dump(),
            R"({"valid":true,"min":3,"argmin":"1001001","facet":"unverified","tight_count":14})");
  r.facet = true;
  EXPECT_EQ(json_of(r, 7)["facet"], true);
}

}  // namespace
}  // namespace circov::io
