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


#include "sunlab/space.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sunlab/random.hpp"
#include "test_util.hpp"

namespace sunlab {
namespace {

using testing::for_all;
using testing::random_point;

TEST(MakeSpace, CoordinateFunctionalsGiveMaxNorm) {
  const Space s = make_space({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.pair_count(), 2u);
  EXPECT_EQ(s, builtin_space("linf", 2));
  EXPECT_EQ(s.norm(Vector{3, -4}), 4.0);
}

TEST(MakeSpace, SignVectorsGiveSumNorm) {
  const Space s = make_space({{1, 1}, {-1, -1}, {1, -1}, {-1, 1}});
  EXPECT_EQ(s, builtin_space("l1", 2));
  EXPECT_EQ(s.norm(Vector{3, -4}), 7.0);
}

TEST(MakeSpace, CanonicalPairOrder) {
  const Space s = make_space({{-1, -1}, {0, -1}, {1, 0}, {0, 1}, {-1, 0}, {1, 1}});
  ASSERT_EQ(s.pair_count(), 3u);
  EXPECT_EQ(s.representative(0), (Vector{1, 1}));
  EXPECT_EQ(s.representative(1), (Vector{1, 0}));
  EXPECT_EQ(s.representative(2), (Vector{0, 1}));
  for (std::size_t p = 0; p < s.pair_count(); ++p) {
    EXPECT_EQ(s.functionals()[2 * p + 1], negated(s.representative(p)));
  }
}

TEST(MakeSpace, MissingAntipodesRejected) {
  EXPECT_SUNLAB_ERROR(make_space({{1, 0}, {0, 1}}), ErrorCode::kNotSymmetric);
}

TEST(MakeSpace, NonSpanningFamilyRejected) {
  EXPECT_SUNLAB_ERROR(make_space({{1, 0}, {-1, 0}}), ErrorCode::kDegenerate);
  EXPECT_SUNLAB_ERROR(make_space({{1, 1, 0}, {-1, -1, 0}, {1, -1, 0}, {-1, 1, 0}}),
                      ErrorCode::kDegenerate);
  EXPECT_SUNLAB_ERROR(make_space({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}), ErrorCode::kDegenerate);
  EXPECT_SUNLAB_ERROR(make_space({{0, 0}, {-0.0, 0}, {1, 0}, {-1, 0}}), ErrorCode::kDuplicateFunctionals);
}

TEST(MakeSpace, ShapeErrors) {
  EXPECT_SUNLAB_ERROR(make_space({}), ErrorCode::kInvalidArgument);
  EXPECT_SUNLAB_ERROR(make_space({{1, 0}, {-1}}), ErrorCode::kDimensionMismatch);
  EXPECT_SUNLAB_ERROR(make_space({{NAN, 0}, {-NAN, 0}}), ErrorCode::kInvalidArgument);
}

TEST(MakeSpace, DuplicatesRejectedBitwise) {
  EXPECT_SUNLAB_ERROR(make_space({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 0}, {-1, 0}}),
                      ErrorCode::kDuplicateFunctionals);
  // -0 and +0 are the same coordinate.
  EXPECT_SUNLAB_ERROR(make_space({{1, 0}, {-1, -0.0}, {0, 1}, {-0.0, -1}, {1, -0.0}, {-1, 0}}),
                      ErrorCode::kDuplicateFunctionals);
  // Nearby but distinct vectors are different functionals.
  EXPECT_NO_THROW(make_space({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1e-300}, {-1, -1e-300}},
                             "", SpaceOptions{.prune_nonextreme = false}));
}

TEST(MakeSpace, NonExtremeFunctionalsPruned) {
  const Space s = make_space({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {0.5, 0.5}, {-0.5, -0.5}});
  EXPECT_EQ(s.pair_count(), 2u);
  EXPECT_EQ(s.pruned_count(), 2u);
  EXPECT_EQ(s, builtin_space("linf", 2));
  const Space kept = make_space({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {0.5, 0.5}, {-0.5, -0.5}}, "",
                                SpaceOptions{.prune_nonextreme = false});
  EXPECT_EQ(kept.pair_count(), 3u);
  // Pruning never changes the norm.
  for_all(200, 1, [&](Rng& rng) {
    const Vector x = random_point(rng, 2, 3.0);
    EXPECT_DOUBLE_EQ(s.norm(x), kept.norm(x));
  });
}

TEST(Norm, Examples) {
  EXPECT_EQ(builtin_space("linf", 2).norm(Vector{3, -4}), 4.0);
  EXPECT_EQ(builtin_space("l1", 2).norm(Vector{3, -4}), 7.0);
  for (const auto& s : standard_test_spaces(3, 5)) {
    EXPECT_EQ(s.norm(Vector(s.dim(), 0.0)), 0.0) << s.name();
  }
  EXPECT_SUNLAB_ERROR(builtin_space("linf", 2).norm(Vector{1, 2, 3}), ErrorCode::kDimensionMismatch);
}

TEST(BallContains, Examples) {
  const Space linf = builtin_space("linf", 2);
  const Space l1 = builtin_space("l1", 2);
  EXPECT_TRUE(ball_contains({{0, 0}, 1}, linf, Vector{1, 1}));
  EXPECT_FALSE(ball_contains({{0, 0}, 1}, linf, Vector{1.5, 0}));
  EXPECT_TRUE(ball_contains({{0, 0}, 2}, l1, Vector{1, 1}));
  EXPECT_FALSE(ball_contains({{0, 0}, 2}, l1, Vector{1, 1.000001}));
  EXPECT_TRUE(ball_contains({{0, 0}, 2}, l1, Vector{1, 1.0 + 1e-13}));
  EXPECT_FALSE(ball_contains({{0, 0}, 2}, l1, Vector{1, 1.0 + 1e-13}, 0.0));
  EXPECT_SUNLAB_ERROR(ball_contains({{0, 0}, -1}, l1, Vector{0, 0}), ErrorCode::kInvalidArgument);
}

TEST(Builtin, FunctionalCounts) {
  EXPECT_EQ(builtin_space("linf", 3).functionals().size(), 6u);
  EXPECT_EQ(builtin_space("l1", 2).functionals().size(), 4u);
  EXPECT_EQ(builtin_space("l1", 5).functionals().size(), 32u);
  EXPECT_EQ(builtin_space("linf", 3).name(), "linf(3)");
  EXPECT_EQ(builtin_space("l1", 4).name(), "l1(4)");
}

TEST(Builtin, BudgetAndNames) {
  EXPECT_SUNLAB_ERROR(builtin_space("l1", 25), ErrorCode::kTooLarge);
  EXPECT_SUNLAB_ERROR(builtin_space("l1", 5, 16), ErrorCode::kTooLarge);
  EXPECT_SUNLAB_ERROR(builtin_space("l2", 2), ErrorCode::kInvalidArgument);
  EXPECT_SUNLAB_ERROR(builtin_space("linf", 0), ErrorCode::kInvalidArgument);
  EXPECT_EQ(builtin_from_string("linf2"), builtin_space("linf", 2));
  EXPECT_EQ(builtin_from_string("l1_3"), builtin_space("l1", 3));
  EXPECT_EQ(builtin_from_string("linf:4"), builtin_space("linf", 4));
  EXPECT_SUNLAB_ERROR(builtin_from_string("linf"), ErrorCode::kInvalidArgument);
  EXPECT_SUNLAB_ERROR(builtin_from_string("linf2x"), ErrorCode::kInvalidArgument);
  EXPECT_SUNLAB_ERROR(builtin_from_string("euclid2"), ErrorCode::kInvalidArgument);
}

TEST(Builtin, MatchesHandBuiltFamilies) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Vector> coords;
    std::vector<Vector> signs;
    for (std::size_t i = 0; i < n; ++i) {
      Vector e(n, 0.0);
      e[i] = 1.0;
      coords.push_back(e);
      coords.push_back(negated(e));
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Vector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1 ? -1.0 : 1.0;
      signs.push_back(v);
    }
    EXPECT_EQ(make_space(coords), builtin_space("linf", n)) << n;
    EXPECT_EQ(make_space(signs), builtin_space("l1", n)) << n;
  }
}

// Closed forms as the oracle.
TEST(NormProperty, ClosedFormsForBuiltins) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Space linf = builtin_space("linf", n);
    const Space l1 = builtin_space("l1", n);
    for_all(300, n, [&](Rng& rng) {
      const Vector x = random_point(rng, n, 10.0);
      double mx = 0.0;
      double sum = 0.0;
      for (double c : x) {
        mx = std::max(mx, std::abs(c));
        sum += std::abs(c);
      }
      EXPECT_EQ(linf.norm(x), mx);
      EXPECT_NEAR(l1.norm(x), sum, 1e-12 * (1.0 + sum));
    });
  }
}

TEST(NormProperty, AxiomsOnRandomSpaces) {
  const auto spaces = standard_test_spaces(20, 11);
  for (const auto& s : spaces) {
    SCOPED_TRACE(s.name());
    for_all(10000 / spaces.size() + 1, 17, [&](Rng& rng) {
      const Vector x = random_point(rng, s.dim(), 5.0);
      const Vector y = random_point(rng, s.dim(), 5.0);
      const double t = rng.uniform(-4.0, 4.0);
      const double scale = 1e-12 * (1.0 + s.norm(x) + s.norm(y));
      EXPECT_NEAR(s.norm(scaled(x, t)), std::abs(t) * s.norm(x), scale * (1.0 + std::abs(t)));
      EXPECT_LE(s.norm(add(x, y)), s.norm(x) + s.norm(y) + scale);
      EXPECT_GT(s.norm(x), 0.0);
      EXPECT_EQ(s.norm(x), s.norm(negated(x)));
      EXPECT_EQ(s.distance(x, y), s.norm(sub(x, y)));
    });
  }
}

TEST(SpaceProperty, FamilyIsSymmetricAsASet) {
  for (const auto& s : standard_test_spaces(20, 23)) {
    std::set<Vector> family(s.functionals().begin(), s.functionals().end());
    EXPECT_EQ(family.size(), s.functionals().size()) << s.name();
    for (const auto& f : s.functionals()) EXPECT_TRUE(family.count(negated(f))) << s.name();
  }
}

TEST(SpaceProperty, ConstructionIsOrderInsensitive) {
  for_all(50, 29, [&](Rng& rng) {
    const Space s = random_space(rng, 2 + rng.index(3), 4 + rng.index(3));
    std::vector<Vector> shuffled = s.functionals();
    for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.index(i)]);
    EXPECT_EQ(make_space(shuffled, s.name(), SpaceOptions{.prune_nonextreme = false}), s);
  });
}

}  // namespace
}  // namespace sunlab
