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

#include "sunlab/random.hpp"

#include <cmath>

#include "sunlab/geometry.hpp"

namespace sunlab {

Vector Rng::unit_direction(std::size_t dim) {
  for (;;) {
    Vector v(dim);
    double r2 = 0.0;
    for (double& c : v) {
      c = uniform(-1.0, 1.0);
      r2 += c * c;
    }
    if (r2 > 1e-6 && r2 <= 1.0) {
      const double r = std::sqrt(r2);
      for (double& c : v) c /= r;
      return v;
    }
  }
}

Space random_space(Rng& rng, std::size_t dim, std::size_t pairs) {
  if (dim == 0 || pairs < dim) {
    fail(ErrorCode::kInvalidArgument, "random_space: need pairs >= dim >= 1");
  }
  for (;;) {
    std::vector<Vector> reps;
    for (std::size_t p = 0; p < pairs; ++p) reps.push_back(rng.unit_direction(dim));
    if (geometry::rank(reps, 1e-6) < dim) continue;
    std::vector<Vector> family;
    for (const auto& r : reps) {
      family.push_back(r);
      family.push_back(negated(r));
    }
    // Points on the sphere are all extreme; skip the pruning pass.
    return make_space(std::move(family),
                      "random(" + std::to_string(dim) + "," + std::to_string(pairs) + ")",
                      SpaceOptions{.prune_nonextreme = false});
  }
}

std::vector<Space> standard_test_spaces(std::size_t random_count, std::uint64_t seed) {
  std::vector<Space> spaces;
  for (std::size_t n = 2; n <= 4; ++n) spaces.push_back(builtin_space("linf", n));
  for (std::size_t n = 2; n <= 4; ++n) spaces.push_back(builtin_space("l1", n));
  Rng rng(seed);
  for (std::size_t k = 0; k < random_count; ++k) {
    const std::size_t dim = 2 + k % 3;
    const std::size_t pairs = dim + rng.index(5);
    spaces.push_back(random_space(rng, dim, pairs));
  }
  return spaces;
}

}  // namespace sunlab
