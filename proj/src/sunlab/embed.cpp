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

#include "sunlab/embed.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace sunlab {

Embedding::Embedding(Space source, std::vector<std::size_t> indices)
    : source_(std::move(source)),
      indices_(std::move(indices)),
      target_(builtin_space("linf", indices_.empty() ? 1 : indices_.size())) {
  if (indices_.empty()) fail(ErrorCode::kInvalidArgument, "embedding: no functionals selected");
  std::vector<std::size_t> sorted = indices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorCode::kInvalidArgument, "embedding: repeated functional index");
  }
  if (sorted.back() >= source_.pair_count()) {
    fail(ErrorCode::kInvalidArgument, "embedding: functional index " + std::to_string(sorted.back()) +
                                          " out of range (" +
                                          std::to_string(source_.pair_count()) + " pairs)");
  }
}

Embedding Embedding::full(const Space& source) {
  std::vector<std::size_t> all(source.pair_count());
  std::iota(all.begin(), all.end(), 0);
  return Embedding(source, std::move(all));
}

Vector Embedding::apply(VecView x) const {
  require_dim(x, source_.dim(), "embed_point");
  Vector out(indices_.size());
  for (std::size_t k = 0; k < indices_.size(); ++k) out[k] = source_.eval(indices_[k], x) + 0.0;
  return out;
}

Vector embed_point(const Embedding& e, VecView x) { return e.apply(x); }

std::size_t EmbeddedCloud::collisions() const {
  std::size_t c = 0;
  for (auto m : multiplicity) c += m - 1;
  return c;
}

EmbeddedCloud embed_cloud(const Embedding& e, const PointCloud& cloud) {
  EmbeddedCloud out;
  std::vector<Vector> images;
  std::map<Vector, std::size_t> seen;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    Vector v = e.apply(cloud[i]);
    const auto [it, inserted] = seen.emplace(v, images.size());
    if (inserted) {
      images.push_back(std::move(v));
      out.preimage.push_back(i);
      out.multiplicity.push_back(1);
    } else {
      ++out.multiplicity[it->second];
    }
    out.image_of.push_back(it->second);
  }
  out.image = PointCloud(std::move(images));
  return out;
}

OrderingTrace norm_convergence_trace(const Space& space, VecView x,
                                     const std::vector<std::size_t>& order) {
  require_dim(x, space.dim(), "norm_convergence_check");
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> expected(space.pair_count());
  std::iota(expected.begin(), expected.end(), 0);
  if (sorted != expected) {
    fail(ErrorCode::kInvalidArgument, "norm_convergence_check: order must permute all pairs");
  }
  OrderingTrace trace;
  trace.order = order;
  double running = 0.0;
  for (std::size_t p : order) {
    const double next = std::max(running, std::abs(space.eval(p, x)));
    if (next < running) trace.nondecreasing = false;
    running = next;
    trace.values.push_back(running);
  }
  trace.reaches_norm = trace.values.back() == space.norm(x);
  return trace;
}

std::vector<OrderingTrace> norm_convergence_check(const Space& space, std::size_t orderings,
                                                  VecView x, std::uint64_t seed) {
  require_dim(x, space.dim(), "norm_convergence_check");
  if (std::all_of(x.begin(), x.end(), [](double c) { return c == 0.0; })) {
    fail(ErrorCode::kInvalidArgument, "norm_convergence_check: x must be nonzero");
  }
  if (orderings < 1) fail(ErrorCode::kInvalidArgument, "norm_convergence_check: orderings must be >= 1");
  std::vector<std::size_t> order(space.pair_count());
  std::iota(order.begin(), order.end(), 0);
  std::vector<OrderingTrace> traces;
  traces.push_back(norm_convergence_trace(space, x, order));
  Rng rng(seed);
  for (std::size_t k = 1; k < orderings; ++k) {
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
    traces.push_back(norm_convergence_trace(space, x, order));
  }
  return traces;
}

}  // namespace sunlab
