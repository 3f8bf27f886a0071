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

// Small dense-vector helpers. Dimensions in this library are tiny (typically
// 1..6), so plain std::vector<double> with spans is used throughout.

#ifndef SUNLAB_VEC_HPP
#define SUNLAB_VEC_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sunlab/error.hpp"

namespace sunlab {

using Vector = std::vector<double>;
using VecView = std::span<const double>;

inline void require_dim(VecView v, std::size_t dim, const char* what) {
  if (v.size() != dim) {
    fail(ErrorCode::kDimensionMismatch,
         std::string(what) + ": expected dimension " + std::to_string(dim) +
             ", got " + std::to_string(v.size()));
  }
}

inline double dot(VecView a, VecView b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vector sub(VecView a, VecView b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vector add(VecView a, VecView b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vector scaled(VecView a, double t) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
  return r;
}

inline Vector negated(VecView a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i] + 0.0;
  return r;
}

// (1 - t) a + t b, evaluated per coordinate.
inline Vector affine(VecView a, VecView b, double t) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (1.0 - t) * a[i] + t * b[i];
  return r;
}

// Maps -0.0 to +0.0 so that bitwise comparison identifies equal values.
inline Vector canonical_zero(Vector v) {
  for (double& c : v) c += 0.0;
  return v;
}

inline bool same_point(VecView a, VecView b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] + 0.0 == b[i] + 0.0)) return false;
  }
  return true;
}

inline bool all_finite(VecView v) {
  for (double c : v) {
    if (!(c - c == 0.0)) return false;
  }
  return true;
}

// Seeded generator with a portable uniform mapping; std distributions are
// implementation-defined and would make reports differ across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform01() * static_cast<double>(n)) % n;
  }

  std::uint64_t next() { return engine_(); }

  Vector uniform_box(VecView center, double half_width) {
    Vector r(center.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = uniform(center[i] - half_width, center[i] + half_width);
    }
    return r;
  }

  // Direction uniform on the Euclidean unit sphere (rejection from the cube).
  Vector unit_direction(std::size_t dim);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sunlab

#endif  // SUNLAB_VEC_HPP
