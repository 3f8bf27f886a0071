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


// Deterministic point sets and sequences used by `verify` and the tests.

#ifndef SUNLAB_FIXTURES_HPP
#define SUNLAB_FIXTURES_HPP

#include <cstddef>
#include <vector>

#include "sunlab/cloud.hpp"
#include "sunlab/space.hpp"

namespace sunlab::fixtures {

/// Grid points of the box [lo, hi] with spacing h along every axis.
PointCloud box_net(const Vector& lo, const Vector& hi, double h);

/// An up-right staircase in the plane: `steps` unit treads and risers
/// starting at the origin, sampled with spacing h (1/h must be an integer).
PointCloud staircase_net(std::size_t steps, double h);

/// {x_1 = 1} and {x_1 = 2} intersected with [0, 1]^(q-1) off the first
/// coordinate, sampled with spacing h. Points on sheet 1 come first.
PointCloud two_sheet_net(std::size_t q, double h);

struct TestSequence {
  std::vector<Vector> points;
  Vector limit;
  bool convergent = false;
};

/// One of four shapes, each far from the tolerance band where the two
/// convergence tests may legitimately differ: geometric decay with rate at
/// most 0.9 along a fixed or a varying direction, convergence to a point at
/// norm distance >= 1 from `limit`, or oscillation of norm >= 1 around it.
TestSequence random_sequence(Rng& rng, const Space& space, std::size_t length);

}  // namespace sunlab::fixtures

#endif  // SUNLAB_FIXTURES_HPP
