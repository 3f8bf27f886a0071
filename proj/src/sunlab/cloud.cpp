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

#include "sunlab/cloud.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace sunlab {

PointCloud::PointCloud(std::vector<Vector> points) : points_(std::move(points)) {
  if (points_.empty()) return;
  dim_ = points_[0].size();
  for (auto& p : points_) {
    if (p.size() != dim_) {
      fail(ErrorCode::kDimensionMismatch,
           "point cloud: mixed dimensions " + std::to_string(dim_) + " and " +
               std::to_string(p.size()));
    }
    if (!all_finite(p)) fail(ErrorCode::kInvalidArgument, "point cloud: non-finite coordinate");
    p = canonical_zero(std::move(p));
  }
  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points_[a] < points_[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (points_[order[i]] == points_[order[i - 1]]) {
      fail(ErrorCode::kDuplicatePoints,
           "point cloud: points " + std::to_string(std::min(order[i], order[i - 1])) +
               " and " + std::to_string(std::max(order[i], order[i - 1])) + " coincide");
    }
  }
}

std::optional<std::size_t> PointCloud::find(VecView p) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (same_point(points_[i], p)) return i;
  }
  return std::nullopt;
}

double net_spacing(const Space& space, const PointCloud& cloud) {
  if (cloud.size() < 3) return 0.0;
  double spacing = 0.0;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < cloud.size(); ++j) {
      if (i != j) nearest = std::min(nearest, space.distance(cloud[i], cloud[j]));
    }
    spacing = std::max(spacing, nearest);
  }
  return spacing;
}

}  // namespace sunlab
