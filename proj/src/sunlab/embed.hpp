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

// Coordinate embeddings s_A(x) = (f(x))_{f in A} into linf(|A|).

#ifndef SUNLAB_EMBED_HPP
#define SUNLAB_EMBED_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sunlab/cloud.hpp"
#include "sunlab/space.hpp"

namespace sunlab {

class Embedding {
 public:
  /// `indices` are representative-pair indices of `source`, in the order of
  /// the target coordinates. Throws kInvalidArgument if empty, out of range
  /// or repeated.
  Embedding(Space source, std::vector<std::size_t> indices);

  /// All representatives in canonical order; an isometry onto its image.
  static Embedding full(const Space& source);

  const Space& source() const { return source_; }
  const Space& target() const { return target_; }
  const std::vector<std::size_t>& indices() const { return indices_; }

  Vector apply(VecView x) const;

 private:
  Space source_;
  std::vector<std::size_t> indices_;
  Space target_;
};

Vector embed_point(const Embedding& e, VecView x);

struct EmbeddedCloud {
  PointCloud image;
  std::vector<std::size_t> preimage;      // first source index per image point
  std::vector<std::size_t> multiplicity;  // source points mapped to each image point
  std::vector<std::size_t> image_of;      // image index per source point
  std::size_t collisions() const;
};

/// Images of coinciding points collapse onto one image point; the first
/// preimage is kept.
EmbeddedCloud embed_cloud(const Embedding& e, const PointCloud& cloud);

struct OrderingTrace {
  std::vector<std::size_t> order;  // pair indices
  std::vector<double> values;      // ||s_{A_k}(x)||_inf for prefixes A_1..A_p
  bool nondecreasing = true;
  bool reaches_norm = false;
};

/// Prefix norms along a given pair ordering.
OrderingTrace norm_convergence_trace(const Space& space, VecView x,
                                     const std::vector<std::size_t>& order);

/// The canonical ordering followed by orderings-1 seeded shuffles.
/// Throws kInvalidArgument for x = 0.
std::vector<OrderingTrace> norm_convergence_check(const Space& space, std::size_t orderings,
                                                  VecView x, std::uint64_t seed = 0);

}  // namespace sunlab

#endif  // SUNLAB_EMBED_HPP
