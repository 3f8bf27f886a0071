// Copyright 2026 The sunlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "sunlab/io.hpp"

#include "sunlab/random.hpp"
#include "test_util.hpp"

namespace sunlab {
namespace {

using io::Json;

std::string error_message(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

TEST(IoSpace, RoundTrip) {
  for (const auto& s : standard_test_spaces(5, 21)) {
    const Json j = io::space_to_json(s);
    const Space back = io::space_from_json(io::parse_json(j.dump()));
    EXPECT_EQ(back, s);
    EXPECT_EQ(back.name(), s.name());
    EXPECT_EQ(back.functionals(), s.functionals());
  }
}

TEST(IoSpace, SpecAndErrors) {
  EXPECT_EQ(io::space_from_spec(Json("l1_2")), builtin_space("l1", 2));
  EXPECT_SUNLAB_ERROR(io::space_from_spec(Json("linf")), ErrorCode::kInvalidArgument);
  EXPECT_SUNLAB_ERROR(io::space_from_json(Json::parse(R"({"dim": 2})")), ErrorCode::kParseError);
  EXPECT_SUNLAB_ERROR(io::space_from_json(Json::parse(R"({"functionals": [[1, "a"]]})")),
                      ErrorCode::kParseError);
  EXPECT_SUNLAB_ERROR(io::space_from_json(Json::parse(R"({"dim": 3, "functionals": [[1, 0], [0, 1]]})")),
                      ErrorCode::kDimensionMismatch);
  EXPECT_SUNLAB_ERROR(io::space_from_json(Json::parse(R"({"functionals": [[1, 1], [-1, -1]]})")),
                      ErrorCode::kDegenerate);
  EXPECT_SUNLAB_ERROR(io::space_from_json(Json::parse(R"({"functionals": [[1, 1], [2, 2]]})")),
                      ErrorCode::kNotSymmetric);
}

TEST(IoParse, ReportsLineAndColumn) {
  const std::string msg = error_message([] { io::parse_json("{\n  \"a\": ]\n}", "f.json"); });
  EXPECT_EQ(msg, "f.json:2:8: invalid JSON");
  EXPECT_SUNLAB_ERROR(io::parse_json("", "x"), ErrorCode::kParseError);
}

TEST(IoWeights, SchemesAndMismatch) {
  const Space s = builtin_space("l1", 2);
  const Weights g = io::weights_from_json(Json::parse(R"({"scheme": "geometric"})"), s);
  EXPECT_EQ(g.size(), 2u);
  const Weights a = io::weights_from_json(Json::parse(R"({"alphas": [0.25, 0.75]})"), s);
  EXPECT_EQ(io::weights_to_json(a).dump(), R"({"alphas":[0.25,0.75]})");
  EXPECT_SUNLAB_ERROR(io::weights_from_json(Json::parse(R"({"alphas": [1]})"), s),
                      ErrorCode::kWeightMismatch);
  EXPECT_SUNLAB_ERROR(io::weights_from_json(Json::parse(R"({})"), s), ErrorCode::kParseError);
}

TEST(IoCloud, JsonRoundTrip) {
  const PointCloud m({{0, 0.5}, {-1.25, 3}});
  EXPECT_EQ(io::cloud_from_json(io::cloud_to_json(m)).points(), m.points());
  EXPECT_SUNLAB_ERROR(io::cloud_from_json(Json::parse(R"({"points": [[0, 0], [0, 0]]})")),
                      ErrorCode::kDuplicatePoints);
  EXPECT_SUNLAB_ERROR(io::cloud_from_json(Json::parse(R"({"points": [[0, 0], [1]]})")),
                      ErrorCode::kDimensionMismatch);
}

TEST(IoCloud, Csv) {
  const PointCloud m = io::cloud_from_csv("# header\n0, 0\n\n1,1.5\r\n 2 ,0\n");
  EXPECT_EQ(m.points(), (std::vector<Vector>{{0, 0}, {1, 1.5}, {2, 0}}));
  EXPECT_EQ(io::cloud_from_csv("1,2").size(), 1u);
  EXPECT_EQ(error_message([] { io::cloud_from_csv("0,0\n1,x\n"); }), "csv:2:3: expected a number");
  EXPECT_EQ(error_message([] { io::cloud_from_csv("0,0\n1,2,3\n"); }),
            "csv:2:1: expected 2 columns, found 3");
  EXPECT_SUNLAB_ERROR(io::cloud_from_csv("1,\n"), ErrorCode::kParseError);
}

TEST(IoEmbedding, RoundTrip) {
  const Embedding e(builtin_space("l1", 3), {3, 1});
  const Embedding back = io::embedding_from_json(io::embedding_to_json(e));
  EXPECT_EQ(back.source(), e.source());
  EXPECT_EQ(back.indices(), e.indices());
  EXPECT_SUNLAB_ERROR(io::embedding_from_json(Json::parse(R"({"source": "l1_2", "indices": [-1]})")),
                      ErrorCode::kParseError);
}

}  // namespace
}  // namespace sunlab
