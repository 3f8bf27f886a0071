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

// Metric projection onto finite clouds and sampled falsification of the sun
// (luminosity) condition
//
//   y in P_M[(1 - lambda) y + lambda x]  for all lambda >= 0.
//
// A "holds-on-grid" verdict only means no lambda on the grid falsified the
// condition; it is never a proof. A falsification is exact: it names the
// lambda and a strictly nearer cloud point.

#ifndef SUNLAB_APPROX_HPP
#define SUNLAB_APPROX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sunlab/cloud.hpp"
#include "sunlab/space.hpp"

namespace sunlab {

inline constexpr double kTieTolerance = 1e-9;

struct ProjectionResult {
  double distance = 0.0;
  std::vector<std::size_t> nearest;  // ascending cloud indices
};

/// Minimisers of ||x - m|| over the cloud; ties within a relative tie_tol
/// all count. Throws kEmptyCloud.
ProjectionResult project(const Space& space, const PointCloud& cloud, VecView x,
                         double tie_tol = kTieTolerance);

struct SunParams {
  double lambda_max = 16.0;
  std::size_t grid = 256;
  double tie_tol = kTieTolerance;
};

struct Falsifier {
  double lambda = 0.0;
  std::size_t competitor = 0;  // cloud index strictly nearer than y
  double y_distance = 0.0;
  double competitor_distance = 0.0;
};

struct SunReport {
  Vector x;
  std::size_t y = 0;  // cloud index of the luminosity candidate
  double lambda_max = 0.0;
  std::size_t grid = 0;
  std::vector<double> lambdas;
  std::optional<Falsifier> falsifier;  // unset: holds-on-grid
  bool holds() const { return !falsifier.has_value(); }
};

/// Uniform grid of `grid` values over [0, lambda_max], with lambda = 1 added.
std::vector<double> lambda_grid(double lambda_max, std::size_t grid);

/// Checks the luminosity condition for candidate y (a cloud index) along the
/// ray from y through x. Throws kNotANearestPoint if y is not in P_M x.
SunReport sun_check(const Space& space, const PointCloud& cloud, VecView x, std::size_t y,
                    const SunParams& params = {});

struct LuminosityResult {
  std::optional<std::size_t> accepted;  // index into `reports`
  std::vector<SunReport> reports;        // one per candidate tried
  bool strict = false;
  bool found() const { return accepted.has_value(); }
};

/// Tries each nearest point in turn and accepts the first that holds on the
/// grid. In strict mode every nearest point must hold (strict protosun
/// condition), and the first one is reported as accepted.
/// Throws kQueryInCloud if x is a cloud point.
LuminosityResult find_luminosity(const Space& space, const PointCloud& cloud, VecView x,
                                 const SunParams& params = {}, bool strict = false);

struct QueryOutcome {
  Vector x;
  bool skipped = false;  // query lies in the cloud
  LuminosityResult result;
};

struct SunSummary {
  std::vector<QueryOutcome> queries;
  std::vector<std::size_t> falsified;  // query indices without a luminosity point
  std::size_t skipped = 0;
  bool no_falsification() const { return falsified.empty(); }
};

SunSummary is_sun_sampled(const Space& space, const PointCloud& cloud,
                          const std::vector<Vector>& queries, const SunParams& params = {},
                          bool strict = false);

/// Random queries from the cloud's bounding box widened by `margin` on every
/// side, keeping only those at distance >= min_distance from the cloud.
/// Queries closer than the cloud's sampling resolution probe the
/// discretisation rather than the set it stands for.
std::vector<Vector> sample_queries(const Space& space, const PointCloud& cloud, std::size_t count,
                                   std::uint64_t seed, double margin, double min_distance);

}  // namespace sunlab

#endif  // SUNLAB_APPROX_HPP
