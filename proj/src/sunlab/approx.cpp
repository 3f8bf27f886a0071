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
#include <limits>

#include "sunlab/geometry.hpp"

namespace sunlab {

namespace {

void require_cloud(const Space& space, const PointCloud& cloud, const char* what) {
  if (cloud.empty()) fail(ErrorCode::kEmptyCloud, std::string(what) + ": empty cloud");
  if (cloud.dim() != space.dim()) {
    fail(ErrorCode::kDimensionMismatch, std::string(what) + ": cloud dimension " +
                                            std::to_string(cloud.dim()) + " vs space " +
                                            std::to_string(space.dim()));
  }
}

bool within_tie(double d, double best, double tie_tol) { return d <= best + tie_tol * best; }

}  // namespace

ProjectionResult project(const Space& space, const PointCloud& cloud, VecView x, double tie_tol) {
  require_cloud(space, cloud, "project");
  require_dim(x, space.dim(), "project");
  if (!(tie_tol >= 0.0)) fail(ErrorCode::kInvalidArgument, "project: tie_tol must be >= 0");
  std::vector<double> d(cloud.size());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    d[i] = space.distance(x, cloud[i]);
    best = std::min(best, d[i]);
  }
  ProjectionResult r;
  r.distance = best;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (within_tie(d[i], best, tie_tol)) r.nearest.push_back(i);
  }
  return r;
}

std::vector<double> lambda_grid(double lambda_max, std::size_t grid) {
  if (!(lambda_max >= 1.0)) fail(ErrorCode::kInvalidArgument, "sun_check: lambda_max must be >= 1");
  if (grid < 2) fail(ErrorCode::kInvalidArgument, "sun_check: grid must be >= 2");
  std::vector<double> l(grid);
  for (std::size_t k = 0; k < grid; ++k) {
    l[k] = lambda_max * static_cast<double>(k) / static_cast<double>(grid - 1);
  }
  if (!std::binary_search(l.begin(), l.end(), 1.0)) {
    l.insert(std::upper_bound(l.begin(), l.end(), 1.0), 1.0);
  }
  return l;
}

SunReport sun_check(const Space& space, const PointCloud& cloud, VecView x, std::size_t y,
                    const SunParams& params) {
  require_cloud(space, cloud, "sun_check");
  require_dim(x, space.dim(), "sun_check");
  if (y >= cloud.size()) fail(ErrorCode::kInvalidArgument, "sun_check: candidate index out of range");
  const auto base = project(space, cloud, x, params.tie_tol);
  if (!std::binary_search(base.nearest.begin(), base.nearest.end(), y)) {
    fail(ErrorCode::kNotANearestPoint, "sun_check: candidate " + std::to_string(y) +
                                           " is not a nearest point of the query");
  }

  SunReport report;
  report.x.assign(x.begin(), x.end());
  report.y = y;
  report.lambda_max = params.lambda_max;
  report.grid = params.grid;
  report.lambdas = lambda_grid(params.lambda_max, params.grid);

  const Vector& yp = cloud[y];
  const double ray_unit = space.distance(x, yp);
  for (double lambda : report.lambdas) {
    const Vector q = affine(yp, x, lambda);
    const double dy = space.distance(q, yp);
    // Positive homogeneity: ||q - y|| = lambda ||x - y||.
    if (std::abs(dy - lambda * ray_unit) > 1e-9 * (1.0 + lambda * ray_unit)) {
      fail(ErrorCode::kInternal, "sun_check: ray distance inconsistent with homogeneity");
    }
    const auto proj = project(space, cloud, q, params.tie_tol);
    if (std::binary_search(proj.nearest.begin(), proj.nearest.end(), y)) continue;
    report.falsifier = Falsifier{lambda, proj.nearest.front(), dy, proj.distance};
    break;
  }
  return report;
}

LuminosityResult find_luminosity(const Space& space, const PointCloud& cloud, VecView x,
                                 const SunParams& params, bool strict) {
  require_cloud(space, cloud, "find_luminosity");
  require_dim(x, space.dim(), "find_luminosity");
  if (cloud.find(x)) fail(ErrorCode::kQueryInCloud, "find_luminosity: query lies in the cloud");
  const auto base = project(space, cloud, x, params.tie_tol);
  LuminosityResult result;
  result.strict = strict;
  bool all_hold = true;
  for (std::size_t y : base.nearest) {
    result.reports.push_back(sun_check(space, cloud, x, y, params));
    const bool holds = result.reports.back().holds();
    all_hold = all_hold && holds;
    if (!strict && holds) {
      result.accepted = result.reports.size() - 1;
      return result;
    }
  }
  if (strict && all_hold) result.accepted = 0;
  return result;
}

SunSummary is_sun_sampled(const Space& space, const PointCloud& cloud,
                          const std::vector<Vector>& queries, const SunParams& params,
                          bool strict) {
  require_cloud(space, cloud, "is_sun_sampled");
  if (queries.empty()) fail(ErrorCode::kInvalidArgument, "is_sun_sampled: no queries");
  SunSummary summary;
  for (std::size_t q = 0; q < queries.size(); ++q) {
    QueryOutcome outcome;
    outcome.x = queries[q];
    require_dim(outcome.x, space.dim(), "is_sun_sampled");
    if (cloud.find(outcome.x)) {
      outcome.skipped = true;
      ++summary.skipped;
    } else {
      outcome.result = find_luminosity(space, cloud, outcome.x, params, strict);
      if (!outcome.result.found()) summary.falsified.push_back(q);
    }
    summary.queries.push_back(std::move(outcome));
  }
  return summary;
}

std::vector<Vector> sample_queries(const Space& space, const PointCloud& cloud, std::size_t count,
                                   std::uint64_t seed, double margin, double min_distance) {
  require_cloud(space, cloud, "sample_queries");
  const auto box = geometry::bounding_box(cloud.points());
  Rng rng(seed);
  std::vector<Vector> out;
  std::size_t attempts = 0;
  const std::size_t max_attempts = 1000 * count + 1000;
  while (out.size() < count) {
    if (++attempts > max_attempts) {
      fail(ErrorCode::kInvalidArgument,
           "sample_queries: could not find queries at the requested distance from the cloud");
    }
    Vector q(space.dim());
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] = rng.uniform(box.lo[i] - margin, box.hi[i] + margin);
    }
    if (cloud.find(q)) continue;
    if (project(space, cloud, q).distance < min_distance) continue;
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace sunlab
