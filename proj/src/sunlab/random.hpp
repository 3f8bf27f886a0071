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

#ifndef SUNLAB_RANDOM_HPP
#define SUNLAB_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sunlab/space.hpp"

namespace sunlab {

/// A polyhedral space whose dual ball has `pairs` antipodal vertex pairs,
/// drawn uniformly on the Euclidean sphere (so every functional is extreme).
/// Redraws until the family spans R^dim. Requires pairs >= dim.
Space random_space(Rng& rng, std::size_t dim, std::size_t pairs);

/// linf(n) and l1(n) for n in {2, 3, 4}, followed by `random_count` random
/// spaces of dimension 2..4 with dim..dim+4 pairs.
std::vector<Space> standard_test_spaces(std::size_t random_count, std::uint64_t seed);

}  // namespace sunlab

#endif  // SUNLAB_RANDOM_HPP
