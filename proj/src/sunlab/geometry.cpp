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

#include "sunlab/geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace sunlab::geometry {

namespace {

Eigen::MatrixXd to_matrix(std::span<const Vector> rows) {
  const auto cols = rows.empty() ? 0 : static_cast<Eigen::Index>(rows[0].size());
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), j) = rows[i][j];
  }
  return m;
}

// Advances `idx` to the next k-combination of {0..n-1}; false when done.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return r;
}

}  // namespace

std::size_t rank(std::span<const Vector> rows, double relative_threshold) {
  if (rows.empty()) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(to_matrix(rows));
  lu.setThreshold(relative_threshold);
  return static_cast<std::size_t>(lu.rank());
}

double min_norm_in_hull(std::span<const Vector> points) {
  if (points.empty()) fail(ErrorCode::kInvalidArgument, "min_norm_in_hull: no points");
  const std::size_t dim = points[0].size();
  double scale = 0.0;
  for (const auto& p : points) scale = std::max(scale, dot(p, p));
  if (scale == 0.0) return 0.0;
  const double eps = 1e-14 * scale;

  // Start from the point of smallest norm.
  std::size_t first = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (dot(points[i], points[i]) < dot(points[first], points[first])) first = i;
  }
  std::vector<std::size_t> corral{first};
  std::vector<double> weights{1.0};
  Vector x = points[first];

  auto combine = [&](const std::vector<double>& w) {
    Vector r(dim, 0.0);
    for (std::size_t i = 0; i < corral.size(); ++i) {
      for (std::size_t d = 0; d < dim; ++d) r[d] += w[i] * points[corral[i]][d];
    }
    return r;
  };

  for (int major = 0; major < 1000; ++major) {
    const double xx = dot(x, x);
    if (xx <= eps) return std::sqrt(std::max(xx, 0.0));
    std::size_t best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double v = dot(points[i], x);
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    if (xx - best_val <= eps) return std::sqrt(xx);
    if (std::find(corral.begin(), corral.end(), best) != corral.end()) return std::sqrt(xx);
    corral.push_back(best);
    weights.push_back(0.0);

    for (int minor = 0; minor < 1000; ++minor) {
      // Minimum-norm point of the affine hull of the corral:
      // [G 1; 1^T 0] [v; mu] = [0; 1] with G the Gram matrix.
      const auto k = static_cast<Eigen::Index>(corral.size());
      Eigen::MatrixXd a(k + 1, k + 1);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
      for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
          a(i, j) = dot(points[corral[static_cast<std::size_t>(i)]],
                        points[corral[static_cast<std::size_t>(j)]]);
        }
        a(i, k) = 1.0;
        a(k, i) = 1.0;
      }
      a(k, k) = 0.0;
      rhs(k) = 1.0;
      const Eigen::VectorXd sol = a.completeOrthogonalDecomposition().solve(rhs);
      std::vector<double> v(corral.size());
      for (std::size_t i = 0; i < corral.size(); ++i) v[i] = sol(static_cast<Eigen::Index>(i));

      if (std::all_of(v.begin(), v.end(), [](double t) { return t > 1e-15; })) {
        weights = v;
        x = combine(weights);
        break;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] <= 1e-15) theta = std::min(theta, weights[i] / (weights[i] - v[i]));
      }
      for (std::size_t i = 0; i < v.size(); ++i) {
        weights[i] = (1.0 - theta) * weights[i] + theta * v[i];
      }
      std::vector<std::size_t> kept;
      std::vector<double> kept_w;
      for (std::size_t i = 0; i < corral.size(); ++i) {
        if (weights[i] > 1e-15) {
          kept.push_back(corral[i]);
          kept_w.push_back(weights[i]);
        }
      }
      if (kept.empty()) {
        kept.push_back(corral.back());
        kept_w.push_back(1.0);
      }
      const double total = std::accumulate(kept_w.begin(), kept_w.end(), 0.0);
      for (double& w : kept_w) w /= total;
      corral = std::move(kept);
      weights = std::move(kept_w);
      x = combine(weights);
    }
  }
  return std::sqrt(dot(x, x));
}

std::vector<Vector> strip_vertices(std::span<const Strip> strips, std::size_t dim,
                                   double tol) {
  if (dim == 0) return {Vector{}};
  if (strips.size() < dim) {
    fail(ErrorCode::kDegenerate, "strip_vertices: fewer strips than dimensions");
  }
  const double systems = binomial(strips.size(), dim) * std::ldexp(1.0, static_cast<int>(dim));
  if (systems > static_cast<double>(kVertexEnumerationBudget)) {
    fail(ErrorCode::kTooLarge, "strip_vertices: " + std::to_string(systems) +
                                   " candidate systems exceed the enumeration budget");
  }

  double scale = 1.0;
  for (const auto& s : strips) scale = std::max({scale, std::abs(s.lo), std::abs(s.hi)});

  std::vector<Vector> out;
  std::vector<std::size_t> idx(dim);
  std::iota(idx.begin(), idx.end(), 0);
  const auto n = static_cast<Eigen::Index>(dim);
  do {
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) a(r, c) = strips[idx[static_cast<std::size_t>(r)]].normal[static_cast<std::size_t>(c)];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible()) continue;
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
      Eigen::VectorXd b(n);
      for (std::size_t r = 0; r < dim; ++r) {
        const Strip& s = strips[idx[r]];
        b(static_cast<Eigen::Index>(r)) = (mask >> r & 1U) ? s.hi : s.lo;
      }
      const Eigen::VectorXd z = lu.solve(b);
      Vector v(dim);
      for (std::size_t c = 0; c < dim; ++c) v[c] = z(static_cast<Eigen::Index>(c)) + 0.0;
      bool feasible = true;
      for (const auto& s : strips) {
        const double val = dot(s.normal, v);
        if (val < s.lo - tol * scale || val > s.hi + tol * scale) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      const bool seen = std::any_of(out.begin(), out.end(), [&](const Vector& w) {
        for (std::size_t c = 0; c < dim; ++c) {
          if (std::abs(w[c] - v[c]) > tol * scale) return false;
        }
        return true;
      });
      if (!seen) out.push_back(std::move(v));
    }
  } while (next_combination(idx, strips.size()));
  return out;
}

Box bounding_box(std::span<const Vector> points) {
  if (points.empty()) fail(ErrorCode::kInvalidArgument, "bounding_box: no points");
  Box box{points[0], points[0]};
  for (const auto& p : points) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      box.lo[i] = std::min(box.lo[i], p[i]);
      box.hi[i] = std::max(box.hi[i], p[i]);
    }
  }
  return box;
}

std::vector<Vector> sort_polygon(std::vector<Vector> vertices) {
  if (vertices.size() < 3 || vertices[0].size() != 2) return vertices;
  double cx = 0.0;
  double cy = 0.0;
  for (const auto& v : vertices) {
    cx += v[0];
    cy += v[1];
  }
  cx /= static_cast<double>(vertices.size());
  cy /= static_cast<double>(vertices.size());
  std::sort(vertices.begin(), vertices.end(), [&](const Vector& a, const Vector& b) {
    return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
  });
  return vertices;
}

}  // namespace sunlab::geometry
