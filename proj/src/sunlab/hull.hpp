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

// Intervals [[x, y]], sampled ball hulls m(x, y), and Menger-connectedness of
// finite clouds.

#ifndef SUNLAB_HULL_HPP
#define SUNLAB_HULL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sunlab/cloud.hpp"
#include "sunlab/geometry.hpp"
#include "sunlab/space.hpp"

namespace sunlab {

inline constexpr double kSlabTolerance = 1e-10;

struct Slab {
  std::size_t pair = 0;  // representative functional index
  double lo = 0.0;
  double hi = 0.0;

  bool operator==(const Slab&) const = default;
};

/// Intersection of one strip lo <= f(z) <= hi per antipodal functional pair.
class SlabPolytope {
 public:
  SlabPolytope(Space space, std::vector<Slab> slabs);

  const Space& space() const { return space_; }
  const std::vector<Slab>& slabs() const { return slabs_; }

  /// Closed membership: boundary points (and anything within `tol` of every
  /// strip) count as inside.
  bool contains(VecView z, double tol = kSlabTolerance) const;

  /// Largest amount by which z violates a strip; zero inside.
  double excess(VecView z) const;

  std::vector<Vector> vertices() const;
  geometry::Box bounding_box() const;

  bool operator==(const SlabPolytope& other) const {
    return space_ == other.space_ && slabs_ == other.slabs_;
  }

 private:
  Space space_;
  std::vector<Slab> slabs_;
};

/// [[x, y]] = { z : min(f(x), f(y)) <= f(z) <= max(f(x), f(y)) for all f }.
SlabPolytope interval(const Space& space, VecView x, VecView y);

/// Half-widths of the bounding box of the unit ball, per coordinate.
Vector unit_ball_extent(const Space& space);

/// Regular grid over a box; axis 0 varies fastest.
struct Grid {
  Vector lo;
  Vector hi;
  std::vector<std::size_t> counts;

  std::size_t size() const;
  Vector step() const;
  Vector point(std::size_t index) const;
  std::vector<std::size_t> multi_index(std::size_t index) const;

  /// Norm-diameter of one grid cell: the resolution at which grid sets can
  /// be compared.
  double cell_diameter(const Space& space) const;
};

std::size_t default_points_per_axis(std::size_t dim);

/// Grid over the bounding box of the ball centred at the midpoint of x, y
/// with radius ||x - y|| / 2. That ball contains m(x, y), so the grid covers
/// every hull approximation regardless of how many balls were sampled.
Grid hull_grid(const Space& space, VecView x, VecView y, std::size_t points_per_axis);

/// Same box, but with a fixed coordinate step (the box is widened to a whole
/// number of steps, anchored at the midpoint ball's lower corner).
Grid hull_grid_with_step(const Space& space, VecView x, VecView y, double step);

/// Outer approximation of m(x, y): the intersection of sampled balls that
/// contain both x and y, each with the least radius at its centre.
class HullApprox {
 public:
  HullApprox(Space space, Vector x, Vector y, std::vector<Ball> balls,
             std::uint64_t seed, double tol);

  const Space& space() const { return space_; }
  const Vector& x() const { return x_; }
  const Vector& y() const { return y_; }
  const std::vector<Ball>& balls() const { return balls_; }
  std::uint64_t seed() const { return seed_; }
  double tolerance() const { return tol_; }

  /// Membership in every sampled ball, with slack tol * max(1, radius).
  bool contains(VecView z) const;

  /// Membership flag per grid point.
  std::vector<std::uint8_t> rasterize(const Grid& grid) const;

 private:
  bool contains_values(const std::vector<double>& fz) const;

  Space space_;
  Vector x_;
  Vector y_;
  std::vector<Ball> balls_;
  std::vector<std::vector<double>> center_values_;  // f_p(center) per ball
  std::uint64_t seed_;
  double tol_;
};

/// Centres are x, y and the midpoint (in that order) followed by uniform
/// draws from the box of half-width 4 ||x - y|| around the midpoint. The
/// sequence for a given seed is fixed, so smaller samples are prefixes of
/// larger ones.
HullApprox ball_hull_outer(const Space& space, VecView x, VecView y, std::size_t n_balls,
                           std::uint64_t seed, double tol = kSlabTolerance);

struct GapReport {
  double gap = 0.0;            // max distance from a hull-only grid point to the interval
  double resolution = 0.0;     // grid cell diameter
  std::size_t grid_points = 0;
  std::size_t interval_points = 0;
  std::size_t hull_points = 0;
  std::size_t hull_only_points = 0;      // in the hull, outside the interval beyond tol
  std::size_t inclusion_violations = 0;  // in the interval, rejected by a ball
  std::optional<Vector> worst_point;     // the hull-only point realising `gap`
  std::optional<Vector> violation_point;
};

/// Compares a sampled hull with the interval on a shared grid. The gap is
/// measured in the space norm against the interval's grid boundary and
/// vertices. With `check_inclusion` off, interval points are not tested
/// against the balls.
GapReport compare_on_grid(const HullApprox& hull, const SlabPolytope& box, const Grid& grid,
                          bool check_inclusion = true);

struct MeiOptions {
  std::size_t n_balls = 2000;
  std::size_t points_per_axis = 0;  // 0 = default_points_per_axis(dim)
  double tol = kSlabTolerance;
};

struct MeiReport {
  std::size_t trials = 0;
  double max_gap = 0.0;
  double max_resolution = 0.0;
  double worst_ratio = 0.0;  // max gap / resolution over trials
  std::size_t hull_only_points = 0;
  std::optional<std::pair<Vector, Vector>> worst_pair;
  std::optional<Vector> witness;  // a hull point outside its interval
};

/// Compares sampled hulls with intervals for random pairs in [-1, 1]^n.
MeiReport mei_check(const Space& space, std::size_t trials, std::uint64_t seed,
                    const MeiOptions& options = {});

struct InclusionReport {
  std::size_t trials = 0;
  std::size_t points_checked = 0;
  std::size_t violations = 0;
  std::optional<std::pair<Vector, Vector>> violating_pair;
  std::optional<Vector> witness;  // an interval point rejected by a ball
};

/// Draws `trials` random pairs in [-1, 1]^n and tests interval points (a
/// grid over the interval's bounding box, its vertices and points of the
/// segment) against the sampled ball hull. Zero violations are expected.
/// points_per_axis = 0 picks 21, 9 or 6 for dimension 2, 3 or >= 4.
InclusionReport hull_inclusion_check(const Space& space, std::size_t trials, std::uint64_t seed,
                                     std::size_t n_balls = 256, std::size_t points_per_axis = 0,
                                     double tol = kSlabTolerance);

enum class HullMode { kInterval, kOracle };

struct MConnectOptions {
  // Pairs at most `scale` apart only need a third cloud point within `scale`
  // of their interval. Unset means net_spacing(cloud); 0 is the exact test.
  std::optional<double> scale;
  HullMode mode = HullMode::kInterval;
  std::size_t oracle_balls = 500;
  std::uint64_t seed = 0;
  double tol = kSlabTolerance;
};

struct MConnectResult {
  bool connected = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  double scale = 0.0;
  std::size_t pairs = 0;
  std::size_t resolved_pairs = 0;  // passed only through the scale rule
};

/// A pair x != y passes when some z in M \ {x, y} lies in its hull.
/// Throws kEmptyCloud.
MConnectResult m_connected(const Space& space, const PointCloud& cloud,
                           const MConnectOptions& options = {});

struct MGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;     // strict third-point pairs
  std::vector<std::pair<std::size_t, std::size_t>> resolved;  // scale-rule pairs
  double scale = 0.0;
};

MGraph m_connectivity_graph(const Space& space, const PointCloud& cloud,
                            const MConnectOptions& options = {});

}  // namespace sunlab

#endif  // SUNLAB_HULL_HPP
