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


#include "sunlab/approx.hpp"

#include <algorithm>
#include <cmath>

#include "sunlab/random.hpp"
#include "test_util.hpp"

namespace sunlab {
namespace {

using testing::dyadic_point;
using testing::for_all;
using testing::random_point;

const Space& linf2() {
  static const Space s = builtin_space("linf", 2);
  return s;
}

PointCloud segment_cloud() {
  std::vector<Vector> pts;
  for (int t = 0; t <= 20; ++t) pts.push_back({0.1 * t, 0.0});
  return PointCloud(pts);
}

TEST(Project, Examples) {
  const auto a = project(linf2(), PointCloud({{0, 0}, {2, 0}}), Vector{0.6, 0});
  EXPECT_DOUBLE_EQ(a.distance, 0.6);
  EXPECT_EQ(a.nearest, (std::vector<std::size_t>{0}));
  const PointCloud corners({{0, 0}, {0, 2}});
  const auto b = project(linf2(), corners, Vector{0, 2});
  EXPECT_EQ(b.distance, 0.0);
  EXPECT_EQ(b.nearest, (std::vector<std::size_t>{1}));
  const auto c = project(linf2(), corners, Vector{1, 1});
  EXPECT_EQ(c.distance, 1.0);
  EXPECT_EQ(c.nearest, (std::vector<std::size_t>{0, 1}));
}

TEST(Project, TiesAreRelative) {
  const PointCloud m({{0, 0}, {0, 2.0 + 1e-12}});
  EXPECT_EQ(project(linf2(), m, Vector{1, 1}).nearest.size(), 2u);
  const PointCloud far({{0, 0}, {0, 2.001}});
  EXPECT_EQ(project(linf2(), far, Vector{1, 1}).nearest.size(), 1u);
  EXPECT_EQ(project(linf2(), far, Vector{1, 1}, 1e-2).nearest.size(), 2u);
}

TEST(Project, Errors) {
  EXPECT_SUNLAB_ERROR(project(linf2(), PointCloud(), Vector{0, 0}), ErrorCode::kEmptyCloud);
  EXPECT_SUNLAB_ERROR(project(linf2(), PointCloud({{0, 0}}), Vector{0}), ErrorCode::kDimensionMismatch);
}

// Oracle: brute-force minimum with an exact comparison.
TEST(ProjectProperty, MatchesBruteForce) {
  for (const auto& s : standard_test_spaces(10, 1)) {
    for_all(30, 2, [&](Rng& rng) {
      std::vector<Vector> pts;
      for (int i = 0; i < 25; ++i) pts.push_back(random_point(rng, s.dim()));
      const PointCloud m(pts);
      const Vector x = random_point(rng, s.dim(), 2.0);
      double best = INFINITY;
      std::size_t arg = 0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const double d = s.norm(sub(x, pts[i]));
        if (d < best) best = d, arg = i;
      }
      const auto r = project(s, m, x);
      EXPECT_NEAR(r.distance, best, 1e-14);
      EXPECT_TRUE(std::count(r.nearest.begin(), r.nearest.end(), arg)) << s.name();
    });
  }
}

TEST(ProjectProperty, TranslationAndScaleEquivariance) {
  for (const auto& s : {builtin_space("linf", 2), builtin_space("l1", 3), builtin_space("linf", 4)}) {
    for_all(100, 3, [&](Rng& rng) {
      std::vector<Vector> pts;
      for (int i = 0; i < 12; ++i) pts.push_back(dyadic_point(rng, s.dim()));
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      const Vector x = dyadic_point(rng, s.dim());
      const Vector v = dyadic_point(rng, s.dim());
      const double t = std::ldexp(1.0, static_cast<int>(rng.index(7)) - 3);
      std::vector<Vector> moved;
      std::vector<Vector> grown;
      for (const auto& p : pts) {
        moved.push_back(add(p, v));
        grown.push_back(scaled(p, t));
      }
      const auto base = project(s, PointCloud(pts), x);
      const auto shifted = project(s, PointCloud(moved), add(x, v));
      const auto scaled_r = project(s, PointCloud(grown), scaled(x, t));
      EXPECT_EQ(shifted.distance, base.distance);
      EXPECT_EQ(shifted.nearest, base.nearest);
      EXPECT_EQ(scaled_r.distance, t * base.distance);
      EXPECT_EQ(scaled_r.nearest, base.nearest);
    });
  }
}

TEST(LambdaGrid, ContainsZeroOneAndMax) {
  const auto g = lambda_grid(16, 256);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 16.0);
  EXPECT_TRUE(std::binary_search(g.begin(), g.end(), 1.0));
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
  EXPECT_EQ(lambda_grid(10, 11).size(), 11u);
  EXPECT_EQ(lambda_grid(10, 100).size(), 101u);
  EXPECT_SUNLAB_ERROR(lambda_grid(0.5, 10), ErrorCode::kInvalidArgument);
  EXPECT_SUNLAB_ERROR(lambda_grid(10, 1), ErrorCode::kInvalidArgument);
}

TEST(SunCheck, Singleton) {
  const PointCloud m({{0.5, 0.5}});
  for_all(20, 4, [&](Rng& rng) {
    const auto r = sun_check(linf2(), m, random_point(rng, 2, 3.0), 0);
    EXPECT_TRUE(r.holds());
  });
}

TEST(SunCheck, TiedPairHoldsOnGrid) {
  const PointCloud m({{0, 0}, {0, 2}});
  const SunParams p{.lambda_max = 10, .grid = 100};
  const auto a = sun_check(linf2(), m, Vector{1, 1}, 0, p);
  EXPECT_TRUE(a.holds());
  EXPECT_EQ(a.lambdas.size(), 101u);
  EXPECT_TRUE(sun_check(linf2(), m, Vector{1, 1}, 1, p).holds());
}

TEST(SunCheck, FalsifiedOnAHorizontalPair) {
  // M = {(-1,0), (1,0)}, x = (0, 0.5): along the ray from (-1,0) the point
  // (-1+l, l/2) is at distance l from (-1,0) but max(|l-2|, l/2) < l from
  // (1,0) for every l > 1.
  const PointCloud m({{-1, 0}, {1, 0}});
  const Vector x{0, 0.5};
  const SunParams p{.lambda_max = 16, .grid = 256};
  const auto r = sun_check(linf2(), m, x, 0, p);
  ASSERT_FALSE(r.holds());
  const double l = r.falsifier->lambda;
  EXPECT_GT(l, 1.0);
  EXPECT_EQ(r.falsifier->competitor, 1u);
  EXPECT_DOUBLE_EQ(r.falsifier->y_distance, l);
  EXPECT_DOUBLE_EQ(r.falsifier->competitor_distance, std::max(std::abs(l - 2.0), 0.5 * l));
  // The first grid value past 1.
  EXPECT_DOUBLE_EQ(l, 16.0 * 16.0 / 255.0);
  const auto lum = find_luminosity(linf2(), m, x, p);
  EXPECT_FALSE(lum.found());
  EXPECT_EQ(lum.reports.size(), 2u);
}

TEST(SunCheck, SampledSegmentInL1IsNotASun) {
  // The nearest sample to x = (0.63, 1.52) is (0.6, 0); beyond
  // l = 0.05 / 0.03 the ray point is strictly nearer to (0.7, 0).
  const Space l1 = builtin_space("l1", 2);
  const PointCloud m({{0.5, 0}, {0.6, 0}, {0.7, 0}});
  const Vector x{0.63, 1.52};
  const auto proj = project(l1, m, x);
  ASSERT_EQ(proj.nearest, (std::vector<std::size_t>{1}));
  const auto r = sun_check(l1, m, x, 1);
  ASSERT_FALSE(r.holds());
  EXPECT_EQ(r.falsifier->competitor, 2u);
  EXPECT_GT(r.falsifier->lambda, 0.05 / 0.03);
  EXPECT_FALSE(find_luminosity(l1, m, x).found());
}

TEST(SunCheck, Errors) {
  const PointCloud m({{0, 0}, {0, 2}});
  EXPECT_SUNLAB_ERROR(sun_check(linf2(), m, Vector{0.5, 0.2}, 1), ErrorCode::kNotANearestPoint);
  EXPECT_SUNLAB_ERROR(sun_check(linf2(), m, Vector{0.5, 0.2}, 7), ErrorCode::kInvalidArgument);
  EXPECT_SUNLAB_ERROR(find_luminosity(linf2(), m, Vector{0, 2}), ErrorCode::kQueryInCloud);
}

TEST(FindLuminosity, Examples) {
  const auto single = find_luminosity(linf2(), PointCloud({{0, 0}}), Vector{3, 1});
  ASSERT_TRUE(single.found());
  EXPECT_EQ(single.reports[*single.accepted].y, 0u);

  const PointCloud seg = segment_cloud();
  const auto a = find_luminosity(linf2(), seg, Vector{1, 5});
  ASSERT_TRUE(a.found());
  EXPECT_TRUE(a.reports[*a.accepted].holds());

  const auto tie = find_luminosity(linf2(), PointCloud({{0, 0}, {0, 2}}), Vector{1, 1});
  ASSERT_TRUE(tie.found());
  EXPECT_EQ(tie.reports[*tie.accepted].y, 0u);
  const auto strict = find_luminosity(linf2(), PointCloud({{0, 0}, {0, 2}}), Vector{1, 1}, {}, true);
  EXPECT_TRUE(strict.found());
  EXPECT_EQ(strict.reports.size(), 2u);
}

TEST(SunCheckProperty, ZeroAndOneNeverFalsify) {
  for (const auto& s : standard_test_spaces(10, 5)) {
    for_all(20, 6, [&](Rng& rng) {
      std::vector<Vector> pts;
      for (int i = 0; i < 8; ++i) pts.push_back(random_point(rng, s.dim()));
      const PointCloud m(pts);
      const Vector x = random_point(rng, s.dim(), 2.0);
      const auto base = project(s, m, x);
      for (std::size_t y : base.nearest) {
        const auto r = sun_check(s, m, x, y, SunParams{.lambda_max = 4, .grid = 9});
        if (r.falsifier) EXPECT_GT(r.falsifier->lambda, 1.0) << s.name();
      }
    });
  }
}

TEST(IsSunSampled, ConvexAndSingletonClouds) {
  const PointCloud seg = segment_cloud();
  const auto q = sample_queries(linf2(), seg, 100, 7, 2.0, net_spacing(linf2(), seg));
  ASSERT_EQ(q.size(), 100u);
  for (const auto& x : q) EXPECT_GE(project(linf2(), seg, x).distance, 0.1 - 1e-12);
  EXPECT_TRUE(is_sun_sampled(linf2(), seg, q).no_falsification());

  const PointCloud single({{0.25, -0.5}});
  const auto qs = sample_queries(linf2(), single, 50, 8, 3.0, 0.0);
  EXPECT_TRUE(is_sun_sampled(linf2(), single, qs).no_falsification());
}

TEST(IsSunSampled, TwoPointReportRecorded) {
  const PointCloud m({{0, 0}, {1, 1}});
  const auto q = sample_queries(linf2(), m, 100, 9, 1.0, 0.0);
  const auto s = is_sun_sampled(linf2(), m, q);
  EXPECT_EQ(s.queries.size(), 100u);
  EXPECT_EQ(s.skipped, 0u);
  for (std::size_t i : s.falsified) EXPECT_FALSE(s.queries[i].result.found());
}

TEST(IsSunSampled, QueriesInTheCloudAreSkipped) {
  const PointCloud m({{0, 0}, {1, 1}});
  const auto s = is_sun_sampled(linf2(), m, {{0, 0}, {3, 3}});
  EXPECT_EQ(s.skipped, 1u);
  EXPECT_TRUE(s.queries[0].skipped);
  EXPECT_SUNLAB_ERROR(is_sun_sampled(linf2(), m, {}), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace sunlab
