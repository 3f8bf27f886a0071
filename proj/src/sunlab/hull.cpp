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

#include "sunlab/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sunlab {

namespace {

std::vector<double> functional_values(const Space& space, VecView z) {
  std::vector<double> v(space.pair_count());
  for (std::size_t p = 0; p < v.size(); ++p) v[p] = space.eval(p, z);
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// SlabPolytope

SlabPolytope::SlabPolytope(Space space, std::vector<Slab> slabs)
    : space_(std::move(space)), slabs_(std::move(slabs)) {
  for (const auto& s : slabs_) {
    if (s.pair >= space_.pair_count()) fail(ErrorCode::kInvalidArgument, "slab: functional index out of range");
    if (!(s.lo <= s.hi)) fail(ErrorCode::kInvalidArgument, "slab: lo > hi");
  }
}

bool SlabPolytope::contains(VecView z, double tol) const {
  require_dim(z, space_.dim(), "interval_contains");
  for (const auto& s : slabs_) {
    const double v = space_.eval(s.pair, z);
    if (v < s.lo - tol || v > s.hi + tol) return false;
  }
  return true;
}

double SlabPolytope::excess(VecView z) const {
  require_dim(z, space_.dim(), "interval excess");
  double worst = 0.0;
  for (const auto& s : slabs_) {
    const double v = space_.eval(s.pair, z);
    worst = std::max({worst, s.lo - v, v - s.hi});
  }
  return worst;
}

std::vector<Vector> SlabPolytope::vertices() const {
  std::vector<geometry::Strip> strips;
  strips.reserve(slabs_.size());
  for (const auto& s : slabs_) strips.push_back({space_.representative(s.pair), s.lo, s.hi});
  return geometry::strip_vertices(strips, space_.dim());
}

geometry::Box SlabPolytope::bounding_box() const {
  const auto v = vertices();
  if (v.empty()) fail(ErrorCode::kInternal, "interval has no vertices");
  return geometry::bounding_box(v);
}

SlabPolytope interval(const Space& space, VecView x, VecView y) {
  require_dim(x, space.dim(), "interval (x)");
  require_dim(y, space.dim(), "interval (y)");
  std::vector<Slab> slabs(space.pair_count());
  for (std::size_t p = 0; p < slabs.size(); ++p) {
    const double fx = space.eval(p, x);
    const double fy = space.eval(p, y);
    slabs[p] = {p, std::min(fx, fy), std::max(fx, fy)};
  }
  return SlabPolytope(space, std::move(slabs));
}

Vector unit_ball_extent(const Space& space) {
  std::vector<geometry::Strip> strips;
  for (std::size_t p = 0; p < space.pair_count(); ++p) {
    strips.push_back({space.representative(p), -1.0, 1.0});
  }
  const auto vertices = geometry::strip_vertices(strips, space.dim());
  Vector extent(space.dim(), 0.0);
  for (const auto& v : vertices) {
    for (std::size_t i = 0; i < v.size(); ++i) extent[i] = std::max(extent[i], std::abs(v[i]));
  }
  return extent;
}

// ---------------------------------------------------------------------------
// Grid

std::size_t Grid::size() const {
  std::size_t n = 1;
  for (auto c : counts) n *= c;
  return n;
}

Vector Grid::step() const {
  Vector s(lo.size(), 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (counts[i] > 1) s[i] = (hi[i] - lo[i]) / static_cast<double>(counts[i] - 1);
  }
  return s;
}

std::vector<std::size_t> Grid::multi_index(std::size_t index) const {
  std::vector<std::size_t> k(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    k[i] = index % counts[i];
    index /= counts[i];
  }
  return k;
}

Vector Grid::point(std::size_t index) const {
  const auto k = multi_index(index);
  const Vector s = step();
  Vector p(lo.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = lo[i] + static_cast<double>(k[i]) * s[i];
  return p;
}

double Grid::cell_diameter(const Space& space) const {
  const Vector s = step();
  double best = 0.0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << s.size()); ++mask) {
    Vector corner(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) corner[i] = (mask >> i & 1U) ? s[i] : -s[i];
    best = std::max(best, space.norm(corner));
  }
  return best;
}

std::size_t default_points_per_axis(std::size_t dim) {
  if (dim <= 2) return 100;
  if (dim == 3) return 40;
  return 16;
}

namespace {

geometry::Box midpoint_ball_box(const Space& space, VecView x, VecView y) {
  require_dim(x, space.dim(), "hull grid (x)");
  require_dim(y, space.dim(), "hull grid (y)");
  const Vector mid = affine(x, y, 0.5);
  const double r = 0.5 * space.distance(x, y);
  const Vector ext = unit_ball_extent(space);
  geometry::Box box{mid, mid};
  for (std::size_t i = 0; i < mid.size(); ++i) {
    box.lo[i] = mid[i] - r * ext[i];
    box.hi[i] = mid[i] + r * ext[i];
  }
  return box;
}

}  // namespace

Grid hull_grid(const Space& space, VecView x, VecView y, std::size_t points_per_axis) {
  if (points_per_axis < 2) fail(ErrorCode::kInvalidArgument, "hull grid: need at least 2 points per axis");
  const auto box = midpoint_ball_box(space, x, y);
  Grid g{box.lo, box.hi, std::vector<std::size_t>(space.dim(), points_per_axis)};
  for (std::size_t i = 0; i < g.counts.size(); ++i) {
    if (g.hi[i] == g.lo[i]) g.counts[i] = 1;
  }
  return g;
}

Grid hull_grid_with_step(const Space& space, VecView x, VecView y, double step) {
  if (!(step > 0.0)) fail(ErrorCode::kInvalidArgument, "hull grid: step must be positive");
  const auto box = midpoint_ball_box(space, x, y);
  Grid g{box.lo, box.hi, std::vector<std::size_t>(space.dim(), 1)};
  for (std::size_t i = 0; i < g.counts.size(); ++i) {
    const double cells = std::ceil((box.hi[i] - box.lo[i]) / step - 1e-9);
    g.counts[i] = static_cast<std::size_t>(cells) + 1;
    g.hi[i] = box.lo[i] + cells * step;
  }
  return g;
}

// ---------------------------------------------------------------------------
// HullApprox

HullApprox::HullApprox(Space space, Vector x, Vector y, std::vector<Ball> balls,
                       std::uint64_t seed, double tol)
    : space_(std::move(space)),
      x_(std::move(x)),
      y_(std::move(y)),
      balls_(std::move(balls)),
      seed_(seed),
      tol_(tol) {
  center_values_.reserve(balls_.size());
  for (const auto& b : balls_) {
    require_dim(b.center, space_.dim(), "hull ball centre");
    center_values_.push_back(functional_values(space_, b.center));
  }
}

bool HullApprox::contains_values(const std::vector<double>& fz) const {
  for (std::size_t b = 0; b < balls_.size(); ++b) {
    const double limit = balls_[b].radius + tol_ * std::max(1.0, balls_[b].radius);
    const auto& fc = center_values_[b];
    for (std::size_t p = 0; p < fz.size(); ++p) {
      if (std::abs(fz[p] - fc[p]) > limit) return false;
    }
  }
  return true;
}

bool HullApprox::contains(VecView z) const {
  require_dim(z, space_.dim(), "hull contains");
  return contains_values(functional_values(space_, z));
}

std::vector<std::uint8_t> HullApprox::rasterize(const Grid& grid) const {
  std::vector<std::uint8_t> inside(grid.size());
  for (std::size_t i = 0; i < inside.size(); ++i) {
    inside[i] = contains_values(functional_values(space_, grid.point(i))) ? 1 : 0;
  }
  return inside;
}

HullApprox ball_hull_outer(const Space& space, VecView x, VecView y, std::size_t n_balls,
                           std::uint64_t seed, double tol) {
  require_dim(x, space.dim(), "ball_hull_outer (x)");
  require_dim(y, space.dim(), "ball_hull_outer (y)");
  if (n_balls < 1) fail(ErrorCode::kInvalidArgument, "ball_hull_outer: n_balls must be >= 1");
  const Vector mid = affine(x, y, 0.5);
  const double half_width = 4.0 * space.distance(x, y);
  Rng rng(seed);
  std::vector<Ball> balls;
  balls.reserve(n_balls);
  for (std::size_t k = 0; k < n_balls; ++k) {
    Vector c;
    if (k == 0) {
      c.assign(x.begin(), x.end());
    } else if (k == 1) {
      c.assign(y.begin(), y.end());
    } else if (k == 2) {
      c = mid;
    } else {
      c = rng.uniform_box(mid, half_width);
    }
    const double r = std::max(space.distance(c, x), space.distance(c, y));
    balls.push_back({std::move(c), r});
  }
  return HullApprox(space, Vector(x.begin(), x.end()), Vector(y.begin(), y.end()),
                    std::move(balls), seed, tol);
}

// ---------------------------------------------------------------------------
// Grid comparison

GapReport compare_on_grid(const HullApprox& hull, const SlabPolytope& box, const Grid& grid,
                          bool check_inclusion) {
  const Space& space = hull.space();
  const double tol = hull.tolerance();
  const std::size_t n = grid.size();
  GapReport report;
  report.grid_points = n;
  report.resolution = grid.cell_diameter(space);

  std::vector<std::uint8_t> in_interval(n);
  std::vector<std::size_t> hull_only;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector z = grid.point(i);
    in_interval[i] = box.contains(z, tol) ? 1 : 0;
    if (in_interval[i]) {
      ++report.interval_points;
      if (check_inclusion) {
        if (hull.contains(z)) {
          ++report.hull_points;
        } else {
          ++report.inclusion_violations;
          if (!report.violation_point) report.violation_point = z;
        }
      }
    } else if (hull.contains(z)) {
      ++report.hull_points;
      hull_only.push_back(i);
    }
  }
  report.hull_only_points = hull_only.size();
  if (hull_only.empty()) return report;

  // Reference set: interval grid points on the grid boundary of the interval
  // set, plus the interval's exact vertices.
  std::vector<Vector> reference = box.vertices();
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_interval[i]) continue;
    const auto k = grid.multi_index(i);
    bool boundary = false;
    std::size_t stride = 1;
    for (std::size_t a = 0; a < k.size() && !boundary; ++a) {
      if (k[a] == 0 || k[a] + 1 >= grid.counts[a]) {
        boundary = true;
      } else if (!in_interval[i - stride] || !in_interval[i + stride]) {
        boundary = true;
      }
      stride *= grid.counts[a];
    }
    if (boundary) reference.push_back(grid.point(i));
  }

  for (std::size_t i : hull_only) {
    const Vector z = grid.point(i);
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& r : reference) nearest = std::min(nearest, space.distance(z, r));
    if (!report.worst_point || nearest > report.gap) {
      report.gap = nearest;
      report.worst_point = z;
    }
  }
  return report;
}

MeiReport mei_check(const Space& space, std::size_t trials, std::uint64_t seed,
                    const MeiOptions& options) {
  if (trials < 1) fail(ErrorCode::kInvalidArgument, "mei_check: trials must be >= 1");
  const std::size_t ppa =
      options.points_per_axis ? options.points_per_axis : default_points_per_axis(space.dim());
  Rng rng(seed);
  const Vector origin(space.dim(), 0.0);
  MeiReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const Vector x = rng.uniform_box(origin, 1.0);
    const Vector y = rng.uniform_box(origin, 1.0);
    const auto hull = ball_hull_outer(space, x, y, options.n_balls, rng.next(), options.tol);
    const auto box = interval(space, x, y);
    const Grid grid = hull_grid(space, x, y, ppa);
    const auto gap = compare_on_grid(hull, box, grid, /*check_inclusion=*/false);
    report.hull_only_points += gap.hull_only_points;
    report.max_resolution = std::max(report.max_resolution, gap.resolution);
    if (gap.resolution > 0.0) {
      report.worst_ratio = std::max(report.worst_ratio, gap.gap / gap.resolution);
    }
    if (!report.worst_pair || gap.gap > report.max_gap) {
      report.max_gap = gap.gap;
      report.worst_pair = std::make_pair(x, y);
      report.witness = gap.worst_point;
    }
  }
  return report;
}

InclusionReport hull_inclusion_check(const Space& space, std::size_t trials, std::uint64_t seed,
                                     std::size_t n_balls, std::size_t points_per_axis,
                                     double tol) {
  if (trials < 1) fail(ErrorCode::kInvalidArgument, "hull_inclusion_check: trials must be >= 1");
  const std::size_t dim = space.dim();
  std::size_t ppa = points_per_axis;
  if (ppa == 0) ppa = dim <= 2 ? 21 : dim == 3 ? 9 : 6;
  if (ppa < 2) fail(ErrorCode::kInvalidArgument, "hull_inclusion_check: need at least 2 points per axis");
  Rng rng(seed);
  const Vector origin(dim, 0.0);
  InclusionReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const Vector x = rng.uniform_box(origin, 1.0);
    const Vector y = rng.uniform_box(origin, 1.0);
    const auto hull = ball_hull_outer(space, x, y, n_balls, rng.next(), tol);
    const auto box = interval(space, x, y);
    std::vector<Vector> probes = box.vertices();
    for (int k = 0; k <= 8; ++k) probes.push_back(affine(x, y, k / 8.0));
    const auto bb = box.bounding_box();
    Grid grid{bb.lo, bb.hi, std::vector<std::size_t>(dim, ppa)};
    for (std::size_t i = 0; i < dim; ++i) {
      if (grid.hi[i] == grid.lo[i]) grid.counts[i] = 1;
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Vector z = grid.point(i);
      if (box.contains(z, tol)) probes.push_back(std::move(z));
    }
    for (const auto& z : probes) {
      ++report.points_checked;
      if (hull.contains(z)) continue;
      ++report.violations;
      if (!report.witness) {
        report.witness = z;
        report.violating_pair = std::make_pair(x, y);
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Menger connectedness

namespace {

struct PairTester {
  const Space& space;
  const PointCloud& cloud;
  const MConnectOptions& options;
  double scale;
  std::vector<std::vector<double>> values;  // f_p(point k)

  PairTester(const Space& s, const PointCloud& c, const MConnectOptions& o)
      : space(s), cloud(c), options(o) {
    if (cloud.empty()) fail(ErrorCode::kEmptyCloud, "m_connected: empty cloud");
    if (cloud.dim() != space.dim()) {
      fail(ErrorCode::kDimensionMismatch, "m_connected: cloud dimension " +
                                              std::to_string(cloud.dim()) + " vs space " +
                                              std::to_string(space.dim()));
    }
    scale = options.scale ? *options.scale : net_spacing(space, cloud);
    if (!(scale >= 0.0)) fail(ErrorCode::kInvalidArgument, "m_connected: scale must be >= 0");
    values.reserve(cloud.size());
    for (const auto& p : cloud.points()) values.push_back(functional_values(space, p));
  }

  bool third_point_in_slabs(std::size_t i, std::size_t j, double slack) const {
    const auto& a = values[i];
    const auto& b = values[j];
    for (std::size_t k = 0; k < cloud.size(); ++k) {
      if (k == i || k == j) continue;
      const auto& c = values[k];
      bool inside = true;
      for (std::size_t p = 0; p < c.size() && inside; ++p) {
        const double lo = std::min(a[p], b[p]) - slack;
        const double hi = std::max(a[p], b[p]) + slack;
        inside = c[p] >= lo && c[p] <= hi;
      }
      if (inside) return true;
    }
    return false;
  }

  bool third_point_in_oracle(std::size_t i, std::size_t j) const {
    const auto hull = ball_hull_outer(space, cloud[i], cloud[j], options.oracle_balls,
                                      options.seed ^ (i * 0x9E3779B97F4A7C15ULL + j), options.tol);
    for (std::size_t k = 0; k < cloud.size(); ++k) {
      if (k != i && k != j && hull.contains(cloud[k])) return true;
    }
    return false;
  }

  bool strict(std::size_t i, std::size_t j) const {
    return options.mode == HullMode::kOracle ? third_point_in_oracle(i, j)
                                             : third_point_in_slabs(i, j, options.tol);
  }

  bool resolved(std::size_t i, std::size_t j) const {
    if (scale <= 0.0) return false;
    if (space.distance(cloud[i], cloud[j]) > scale * (1.0 + 1e-9)) return false;
    return third_point_in_slabs(i, j, scale * (1.0 + 1e-9));
  }
};

}  // namespace

MConnectResult m_connected(const Space& space, const PointCloud& cloud,
                           const MConnectOptions& options) {
  PairTester tester(space, cloud, options);
  MConnectResult result;
  result.scale = tester.scale;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t j = i + 1; j < cloud.size(); ++j) {
      ++result.pairs;
      if (tester.strict(i, j)) continue;
      if (tester.resolved(i, j)) {
        ++result.resolved_pairs;
        continue;
      }
      result.connected = false;
      result.witness = std::make_pair(i, j);
      return result;
    }
  }
  return result;
}

MGraph m_connectivity_graph(const Space& space, const PointCloud& cloud,
                            const MConnectOptions& options) {
  PairTester tester(space, cloud, options);
  MGraph graph;
  graph.vertices = cloud.size();
  graph.scale = tester.scale;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t j = i + 1; j < cloud.size(); ++j) {
      if (tester.strict(i, j)) {
        graph.edges.emplace_back(i, j);
      } else if (tester.resolved(i, j)) {
        graph.resolved.emplace_back(i, j);
      }
    }
  }
  return graph;
}

}  // namespace sunlab
