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

#ifndef SUNLAB_CLOUD_HPP
#define SUNLAB_CLOUD_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "sunlab/space.hpp"
#include "sunlab/vec.hpp"

namespace sunlab {

/// A finite point set standing in for a (discretised) closed set. Points are
/// pairwise distinct (bitwise, after normalising -0 to +0) and share one
/// dimension. Order is preserved; indices are stable.
class PointCloud {
 public:
  PointCloud() = default;

  /// Throws kDimensionMismatch or kDuplicatePoints.
  explicit PointCloud(std::vector<Vector> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::size_t dim() const { return dim_; }
  const Vector& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Vector>& points() const { return points_; }

  std::optional<std::size_t> find(VecView p) const;

 private:
  std::vector<Vector> points_;
  std::size_t dim_ = 0;
};

/// Largest nearest-neighbour distance in the cloud: the coarsest gap of the
/// sample. Zero for clouds with fewer than three points, where the only
/// gap is the diameter and says nothing about sampling resolution.
double net_spacing(const Space& space, const PointCloud& cloud);

}  // namespace sunlab

#endif  // SUNLAB_CLOUD_HPP
