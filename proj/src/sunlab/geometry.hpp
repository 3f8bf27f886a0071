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

// Low-level convex geometry used by the space and hull modules.

#ifndef SUNLAB_GEOMETRY_HPP
#define SUNLAB_GEOMETRY_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "sunlab/vec.hpp"

namespace sunlab::geometry {

// Numerical rank of the matrix whose rows are `rows`.
std::size_t rank(std::span<const Vector> rows, double relative_threshold = 1e-12);

// Euclidean norm of the minimum-norm point of conv(points) (Wolfe's
// nearest-point algorithm).
double min_norm_in_hull(std::span<const Vector> points);

// One constraint lo <= normal . z <= hi.
struct Strip {
  Vector normal;
  double lo = 0.0;
  double hi = 0.0;
};

inline constexpr std::size_t kVertexEnumerationBudget = 4'000'000;

// Vertices of the bounded polytope given as an intersection of strips whose
// normals span R^dim. Brute force over dim-subsets of strips and both sides
// of each; throws kTooLarge when the number of candidate systems exceeds
// kVertexEnumerationBudget.
std::vector<Vector> strip_vertices(std::span<const Strip> strips,
                                   std::size_t dim, double tol = 1e-9);

struct Box {
  Vector lo;
  Vector hi;
};

Box bounding_box(std::span<const Vector> points);

// Vertices of a convex polygon sorted counter-clockwise around their
// centroid. Only meaningful for dim = 2.
std::vector<Vector> sort_polygon(std::vector<Vector> vertices);

}  // namespace sunlab::geometry

#endif  // SUNLAB_GEOMETRY_HPP
