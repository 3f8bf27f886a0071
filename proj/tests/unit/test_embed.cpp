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


#include "sunlab/embed.hpp"

#include <algorithm>

#include "sunlab/hull.hpp"
#include "sunlab/random.hpp"
#include "test_util.hpp"

namespace sunlab {
namespace {

using testing::for_all;
using testing::random_point;

TEST(Embedding, Examples) {
  const Space l1 = builtin_space("l1", 2);
  const Embedding full = Embedding::full(l1);
  EXPECT_EQ(full.target(), builtin_space("linf", 2));
  EXPECT_EQ(full.apply(Vector{2, 0}), (Vector{2, 2}));
  EXPECT_EQ(full.apply(Vector{0, 0}), (Vector{0, 0}));

  const Space linf3 = builtin_space("linf", 3);
  EXPECT_EQ(Embedding::full(linf3).apply(Vector{1, -2, 3}), (Vector{1, -2, 3}));
  EXPECT_EQ(embed_point(Embedding(linf3, {2, 0}), Vector{1, -2, 3}), (Vector{3, 1}));
}

TEST(Embedding, Errors) {
  const Space l1 = builtin_space("l1", 2);
  EXPECT_SUNLAB_ERROR(Embedding(l1, {}), ErrorCode::kInvalidArgument);
  EXPECT_SUNLAB_ERROR(Embedding(l1, {0, 0}), ErrorCode::kInvalidArgument);
  EXPECT_SUNLAB_ERROR(Embedding(l1, {2}), ErrorCode::kInvalidArgument);
  EXPECT_SUNLAB_ERROR(Embedding::full(l1).apply(Vector{1}), ErrorCode::kDimensionMismatch);
}

TEST(EmbedCloud, ImageAndCollisions) {
  const Space l1 = builtin_space("l1", 2);
  const PointCloud m({{0, 0}, {1, 1}, {2, 0}});
  const auto e = embed_cloud(Embedding::full(l1), m);
  EXPECT_EQ(e.image.points(), (std::vector<Vector>{{0, 0}, {2, 0}, {2, 2}}));
  EXPECT_EQ(e.collisions(), 0u);

  // (0,0) and (1,-1) share the value of x1 + x2.
  const PointCloud n({{0, 0}, {1, -1}, {1, 1}});
  const auto single = embed_cloud(Embedding(l1, {0}), n);
  EXPECT_EQ(single.image.size(), 2u);
  EXPECT_EQ(single.collisions(), 1u);
  EXPECT_EQ(single.preimage, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(single.multiplicity, (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(single.image_of, (std::vector<std::size_t>{0, 0, 1}));
}

TEST(NormTrace, Examples) {
  const auto a = norm_convergence_trace(builtin_space("linf", 3), Vector{1, 2, 3}, {2, 1, 0});
  EXPECT_EQ(a.values, (std::vector<double>{3, 3, 3}));
  EXPECT_TRUE(a.reaches_norm);
  const auto b = norm_convergence_trace(builtin_space("linf", 3), Vector{1, 2, 3}, {0, 1, 2});
  EXPECT_EQ(b.values, (std::vector<double>{1, 2, 3}));
  const auto c = norm_convergence_trace(builtin_space("l1", 2), Vector{2, 0}, {0, 1});
  EXPECT_EQ(c.values, (std::vector<double>{2, 2}));
  EXPECT_SUNLAB_ERROR(norm_convergence_trace(builtin_space("l1", 2), Vector{2, 0}, {0}),
                      ErrorCode::kInvalidArgument);
  EXPECT_SUNLAB_ERROR(norm_convergence_check(builtin_space("l1", 2), 3, Vector{0, 0}),
                      ErrorCode::kInvalidArgument);
}

TEST(NormTraceProperty, MonotoneAndReachesNorm) {
  for (const auto& s : standard_test_spaces(10, 11)) {
    for_all(20, 12, [&](Rng& rng) {
      const Vector x = random_point(rng, s.dim());
      const auto traces = norm_convergence_check(s, 5, x, rng.next());
      ASSERT_EQ(traces.size(), 5u);
      for (const auto& t : traces) {
        EXPECT_TRUE(t.nondecreasing);
        EXPECT_TRUE(t.reaches_norm) << s.name();
        EXPECT_EQ(t.values.size(), s.pair_count());
      }
    });
  }
}

TEST(EmbeddingProperty, ContractionAndFullIsometry) {
  for (const auto& s : standard_test_spaces(10, 13)) {
    for_all(200, 14, [&](Rng& rng) {
      std::vector<std::size_t> picked;
      for (std::size_t i = 0; i < s.pair_count(); ++i) {
        if (rng.index(2) == 0) picked.push_back(i);
      }
      if (picked.empty()) picked.push_back(0);
      const Embedding part(s, picked);
      const Embedding full = Embedding::full(s);
      const Vector x = random_point(rng, s.dim());
      const Vector y = random_point(rng, s.dim());
      const double d = s.norm(sub(x, y));
      EXPECT_LE(part.target().norm(sub(part.apply(x), part.apply(y))), d * (1 + 1e-12) + 1e-15);
      EXPECT_NEAR(full.target().norm(sub(full.apply(x), full.apply(y))), d, 1e-12 * (1 + d));
    });
  }
}

TEST(EmbeddingProperty, BetweennessTransports) {
  for (const auto& s : standard_test_spaces(10, 15)) {
    const Embedding full = Embedding::full(s);
    for_all(200, 16, [&](Rng& rng) {
      const Vector x = random_point(rng, s.dim());
      const Vector y = random_point(rng, s.dim());
      const Vector z = affine(x, y, rng.uniform01());
      ASSERT_TRUE(interval(s, x, y).contains(z));
      EXPECT_TRUE(interval(full.target(), full.apply(x), full.apply(y)).contains(full.apply(z)));
      const Vector w = random_point(rng, s.dim());
      EXPECT_EQ(interval(s, x, y).contains(w),
                interval(full.target(), full.apply(x), full.apply(y)).contains(full.apply(w)))
          << s.name();
    });
  }
}

TEST(EmbeddingProperty, MConnectednessTransports) {
  MConnectOptions exact;
  exact.scale = 0.0;
  for (const auto& s : standard_test_spaces(6, 17)) {
    for_all(20, 18, [&](Rng& rng) {
      std::vector<Vector> pts;
      for (int i = 0; i < 7; ++i) pts.push_back(testing::dyadic_point(rng, s.dim()));
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      const PointCloud m(pts);
      const bool source = m_connected(s, m, exact).connected;
      const auto full = embed_cloud(Embedding::full(s), m);
      EXPECT_EQ(m_connected(Embedding::full(s).target(), full.image, exact).connected, source);
      const Embedding part(s, {0});
      const auto img = embed_cloud(part, m);
      if (source && img.collisions() == 0) {
        EXPECT_TRUE(m_connected(part.target(), img.image, exact).connected) << s.name();
      }
    });
  }
}

}  // namespace
}  // namespace sunlab
