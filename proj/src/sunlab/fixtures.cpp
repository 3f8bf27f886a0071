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


#include "sunlab/fixtures.hpp"

#include <cmath>

namespace sunlab::fixtures {

namespace {

std::size_t steps_between(double lo, double hi, double h) {
  const double cells = (hi - lo) / h;
  return static_cast<std::size_t>(std::floor(cells + 1e-9));
}

// A direction of space-norm `length`.
Vector direction(Rng& rng, const Space& space, double length) {
  Vector d = rng.unit_direction(space.dim());
  return scaled(d, length / space.norm(d));
}

}  // namespace

PointCloud box_net(const Vector& lo, const Vector& hi, double h) {
  if (lo.size() != hi.size() || lo.empty()) {
    fail(ErrorCode::kDimensionMismatch, "box_net: corner dimensions differ");
  }
  if (!(h > 0.0)) fail(ErrorCode::kInvalidArgument, "box_net: spacing must be positive");
  std::vector<std::size_t> counts;
  std::size_t total = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) fail(ErrorCode::kInvalidArgument, "box_net: empty box");
    counts.push_back(steps_between(lo[i], hi[i], h) + 1);
    total *= counts.back();
  }
  std::vector<Vector> points;
  points.reserve(total);
  for (std::size_t index = 0; index < total; ++index) {
    Vector p(lo.size());
    std::size_t rest = index;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      p[i] = lo[i] + static_cast<double>(rest % counts[i]) * h;
      rest /= counts[i];
    }
    points.push_back(std::move(p));
  }
  return PointCloud(std::move(points));
}

PointCloud staircase_net(std::size_t steps, double h) {
  if (steps == 0) fail(ErrorCode::kInvalidArgument, "staircase_net: need at least one step");
  if (!(h > 0.0 && h <= 1.0)) fail(ErrorCode::kInvalidArgument, "staircase_net: spacing must be in (0, 1]");
  const std::size_t per_unit = static_cast<std::size_t>(std::llround(1.0 / h));
  const double step = 1.0 / static_cast<double>(per_unit);
  std::vector<Vector> points{{0.0, 0.0}};
  for (std::size_t s = 0; s < steps; ++s) {
    const double base = static_cast<double>(s);
    for (std::size_t k = 1; k <= per_unit; ++k) {
      points.push_back({base + static_cast<double>(k) * step, base});
    }
    for (std::size_t k = 1; k <= per_unit; ++k) {
      points.push_back({base + 1.0, base + static_cast<double>(k) * step});
    }
  }
  return PointCloud(std::move(points));
}

PointCloud two_sheet_net(std::size_t q, double h) {
  if (q < 2) fail(ErrorCode::kInvalidArgument, "two_sheet_net: need dimension >= 2");
  const PointCloud face = box_net(Vector(q - 1, 0.0), Vector(q - 1, 1.0), h);
  std::vector<Vector> points;
  for (double sheet : {1.0, 2.0}) {
    for (const auto& f : face.points()) {
      Vector p{sheet};
      p.insert(p.end(), f.begin(), f.end());
      points.push_back(std::move(p));
    }
  }
  return PointCloud(std::move(points));
}

TestSequence random_sequence(Rng& rng, const Space& space, std::size_t length) {
  if (length == 0) fail(ErrorCode::kInvalidArgument, "random_sequence: empty sequence");
  TestSequence s;
  s.limit = rng.uniform_box(Vector(space.dim(), 0.0), 1.0);
  s.points.reserve(length);
  const std::size_t kind = rng.index(4);
  const double rate = rng.uniform(0.3, 0.9);
  const double scale = rng.uniform(0.5, 2.0);
  switch (kind) {
    case 0: {
      const Vector d = direction(rng, space, scale);
      for (std::size_t n = 0; n < length; ++n) {
        s.points.push_back(add(s.limit, scaled(d, std::pow(rate, n))));
      }
      s.convergent = true;
      break;
    }
    case 1: {
      for (std::size_t n = 0; n < length; ++n) {
        const Vector d = direction(rng, space, scale * std::pow(rate, n));
        s.points.push_back(add(s.limit, d));
      }
      s.convergent = true;
      break;
    }
    case 2: {
      const Vector offset = direction(rng, space, 1.0 + scale);
      const Vector d = direction(rng, space, scale);
      for (std::size_t n = 0; n < length; ++n) {
        s.points.push_back(add(add(s.limit, offset), scaled(d, std::pow(rate, n))));
      }
      break;
    }
    default: {
      const Vector d = direction(rng, space, 1.0 + scale);
      for (std::size_t n = 0; n < length; ++n) {
        s.points.push_back(n % 2 == 0 ? add(s.limit, d) : sub(s.limit, d));
      }
      break;
    }
  }
  return s;
}

}  // namespace sunlab::fixtures
