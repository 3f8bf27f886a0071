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

#include "sunlab/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sunlab/hull.hpp"

namespace sunlab {

// ---------------------------------------------------------------------------
// Weights

Weights::Weights(std::vector<double> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.empty()) fail(ErrorCode::kInvalidArgument, "weights: empty");
  min_ = std::numeric_limits<double>::infinity();
  for (double a : alphas_) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      fail(ErrorCode::kInvalidArgument, "weights: every alpha must be finite and positive");
    }
    sum_ += a;
    min_ = std::min(min_, a);
  }
}

Weights Weights::geometric(std::size_t count) {
  if (count == 0) fail(ErrorCode::kInvalidArgument, "weights: empty");
  std::vector<double> a(count);
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    a[i] = std::ldexp(1.0, -static_cast<int>(i + 1));
    total += a[i];
  }
  for (double& v : a) v /= total;
  return Weights(std::move(a));
}

Weights Weights::uniform(std::size_t count) {
  if (count == 0) fail(ErrorCode::kInvalidArgument, "weights: empty");
  return Weights(std::vector<double>(count, 1.0 / static_cast<double>(count)));
}

Weights Weights::scheme(std::string_view name, std::size_t count) {
  if (name == "geometric") return geometric(count);
  if (name == "uniform") return uniform(count);
  fail(ErrorCode::kInvalidArgument,
       "weights: unknown scheme '" + std::string(name) + "' (expected geometric or uniform)");
}

// ---------------------------------------------------------------------------
// Associated norm and betweenness

namespace {

void require_weights(const Space& space, const Weights& w) {
  if (w.size() != space.pair_count()) {
    fail(ErrorCode::kWeightMismatch, "weights: " + std::to_string(w.size()) +
                                         " alphas for " + std::to_string(space.pair_count()) +
                                         " functional pairs");
  }
}

}  // namespace

double associated_norm(const Space& space, const Weights& w, VecView x) {
  require_weights(space, w);
  require_dim(x, space.dim(), "associated_norm");
  double s = 0.0;
  for (std::size_t p = 0; p < space.pair_count(); ++p) {
    s += w.alphas()[p] * std::abs(space.eval(p, x));
  }
  return s;
}

double associated_distance(const Space& space, const Weights& w, VecView a, VecView b) {
  require_dim(a, space.dim(), "associated_distance");
  require_dim(b, space.dim(), "associated_distance");
  return associated_norm(space, w, sub(a, b));
}

double between_defect(const Space& space, const Weights& w, VecView x, VecView z, VecView y) {
  return associated_distance(space, w, x, z) + associated_distance(space, w, z, y) -
         associated_distance(space, w, x, y);
}

bool is_between(const Space& space, const Weights& w, VecView x, VecView z, VecView y,
                double tol) {
  if (!(tol > 0.0)) fail(ErrorCode::kInvalidArgument, "is_between: tol must be positive");
  return between_defect(space, w, x, z, y) <= tol;
}

bool functionals_additive(const Space& space, VecView x, VecView z, VecView y, double tol) {
  require_dim(x, space.dim(), "functionals_additive");
  require_dim(z, space.dim(), "functionals_additive");
  require_dim(y, space.dim(), "functionals_additive");
  for (std::size_t p = 0; p < space.pair_count(); ++p) {
    const double fx = space.eval(p, x);
    const double fy = space.eval(p, y);
    const double fz = space.eval(p, z);
    if (std::abs(fx - fz) + std::abs(fz - fy) - std::abs(fx - fy) > tol) return false;
  }
  return true;
}

EquivalenceReport between_equiv_check(const Space& space, const Weights& w, std::size_t trials,
                                      std::uint64_t seed, double tol) {
  require_weights(space, w);
  if (trials < 1) fail(ErrorCode::kInvalidArgument, "between_equiv_check: trials must be >= 1");
  const std::size_t n = space.dim();
  const Vector origin(n, 0.0);
  Rng rng(seed);
  EquivalenceReport report;
  report.trials = trials;

  auto inner_point = [&](const std::vector<Vector>& vertices) {
    Vector z(n, 0.0);
    double total = 0.0;
    std::vector<double> lambda(vertices.size());
    for (auto& l : lambda) {
      l = rng.uniform01() + 1e-3;
      total += l;
    }
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      for (std::size_t i = 0; i < n; ++i) z[i] += lambda[v] / total * vertices[v][i];
    }
    return z;
  };

  for (std::size_t t = 0; t < trials; ++t) {
    const Vector x = rng.uniform_box(origin, 1.0);
    Vector y = rng.uniform_box(origin, 1.0);
    const double shape = rng.uniform01();
    if (shape < 0.05) {
      y = x;
    } else if (shape < 0.25) {
      const std::size_t k = rng.index(n);
      y[k] = x[k];
    }
    const auto box = interval(space, x, y);

    Vector z;
    switch (t % 6) {
      case 0:
        z = rng.uniform_box(origin, 1.5);
        break;
      case 1:
        z = affine(x, y, rng.uniform01());
        break;
      case 2:
        z = inner_point(box.vertices());
        break;
      case 3: {
        const auto v = box.vertices();
        z = v[rng.index(v.size())];
        break;
      }
      case 4: {
        z = inner_point(box.vertices());
        const Vector d = rng.unit_direction(n);
        const double size = std::pow(10.0, rng.uniform(-3.0, -1.0));
        for (std::size_t i = 0; i < n; ++i) z[i] += size * d[i];
        break;
      }
      default:
        z = rng.uniform01() < 0.5 ? x : y;
        break;
    }

    const bool a = box.contains(z, tol);
    const bool b = functionals_additive(space, x, z, y, tol);
    const bool c = between_defect(space, w, x, z, y) <= tol;
    report.interval_hits += a;
    report.functional_hits += b;
    report.between_hits += c;
    if (a != b || b != c) {
      ++report.disagreements;
      if (!report.first_disagreement) report.first_disagreement = {{x, z, y, a, b, c}};
    }
  }
  return report;
}

BetweennessGraph betweenness_graph(const Space& space, const Weights& w, const PointCloud& cloud,
                                   double eps) {
  require_weights(space, w);
  if (!(eps >= 0.0)) fail(ErrorCode::kInvalidArgument, "betweenness_graph: eps must be >= 0");
  if (!cloud.empty() && cloud.dim() != space.dim()) {
    fail(ErrorCode::kDimensionMismatch, "betweenness_graph: cloud dimension mismatch");
  }
  BetweennessGraph g;
  g.vertices = cloud.size();
  g.eps = eps;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t j = i + 1; j < cloud.size(); ++j) {
      g.edges.push_back({i, j, associated_distance(space, w, cloud[i], cloud[j])});
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Monotone paths

MonotonicityReport check_monotone(const Space& space, const std::vector<Vector>& points,
                                  double tol) {
  if (points.empty()) fail(ErrorCode::kInvalidArgument, "check_monotone: empty path");
  for (const auto& p : points) require_dim(p, space.dim(), "check_monotone");
  MonotonicityReport report;
  report.functionals.resize(space.pair_count());
  for (std::size_t f = 0; f < space.pair_count(); ++f) {
    std::vector<double> v(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) v[k] = space.eval(f, points[k]);
    const double net = v.back() - v.front();
    const double slack = tol * (1.0 + std::abs(net));
    FunctionalVerdict verdict{true, true, 0.0};
    for (std::size_t k = 1; k < v.size(); ++k) {
      const double step = v[k] - v[k - 1];
      if (step < -slack) verdict.nondecreasing = false;
      if (step > slack) verdict.nonincreasing = false;
      const double against = net >= 0.0 ? -step : step;
      verdict.worst_backstep = std::max(verdict.worst_backstep, against);
    }
    report.monotone = report.monotone && verdict.monotone();
    report.functionals[f] = verdict;
  }
  return report;
}

PathResult monotone_path(const Space& space, const Weights& w, const PointCloud& cloud,
                         VecView x, VecView y, const PathOptions& options) {
  require_weights(space, w);
  require_dim(x, space.dim(), "monotone_path (x)");
  require_dim(y, space.dim(), "monotone_path (y)");
  const auto source = cloud.find(x);
  const auto target = cloud.find(y);
  if (!source || !target) {
    fail(ErrorCode::kEndpointNotInCloud, "monotone_path: endpoint is not a cloud point");
  }

  PathResult result;
  result.target = associated_distance(space, w, x, y);
  result.eps = options.eps ? *options.eps : 1e-6 * result.target;
  result.step = options.step ? *options.step : net_spacing(space, cloud);
  if (!(result.eps >= 0.0)) fail(ErrorCode::kInvalidArgument, "monotone_path: eps must be >= 0");
  if (!(result.step >= 0.0)) fail(ErrorCode::kInvalidArgument, "monotone_path: step must be >= 0");

  const std::size_t n = cloud.size();
  const double step_limit = result.step * (1.0 + 1e-9);
  constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<double> dist(n, kInf);
  std::vector<std::size_t> prev(n, kNone);
  std::vector<char> done(n, 0);
  dist[*source] = 0.0;
  // Dense Dijkstra: the graph is implicit and typically dense.
  for (;;) {
    std::size_t u = kNone;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && dist[i] < kInf && (u == kNone || dist[i] < dist[u])) u = i;
    }
    if (u == kNone || u == *target) break;
    done[u] = 1;
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v] || v == u) continue;
      if (space.distance(cloud[u], cloud[v]) > step_limit) continue;
      const double cand = dist[u] + associated_distance(space, w, cloud[u], cloud[v]);
      if (cand < dist[v]) {
        dist[v] = cand;
        prev[v] = u;
      }
    }
  }

  result.length = dist[*target];
  if (result.length == kInf) return result;

  Path path;
  for (std::size_t v = *target; v != kNone; v = prev[v]) path.indices.push_back(v);
  std::reverse(path.indices.begin(), path.indices.end());
  for (std::size_t i : path.indices) path.points.push_back(cloud[i]);
  path.monotonicity = check_monotone(space, path.points, options.monotone_tol);
  result.path = std::move(path);
  result.found = result.length <= result.target + result.eps;
  return result;
}

// ---------------------------------------------------------------------------
// Convergence

ConvergenceReport seq_convergence_check(const Space& space, const Weights& w,
                                        const std::vector<Vector>& sequence, VecView limit,
                                        double tol) {
  require_weights(space, w);
  if (sequence.empty()) fail(ErrorCode::kInvalidArgument, "seq_convergence_check: empty sequence");
  if (!(tol > 0.0)) fail(ErrorCode::kInvalidArgument, "seq_convergence_check: tol must be positive");
  require_dim(limit, space.dim(), "seq_convergence_check (limit)");
  const std::size_t len = sequence.size();
  ConvergenceReport r;
  r.length = len;
  r.tol = tol;
  r.distance_tail.assign(len, 0.0);
  r.functional_tail.assign(len, 0.0);
  double norm_sup = 0.0;
  double fn_sup = 0.0;
  for (std::size_t k = len; k-- > 0;) {
    require_dim(sequence[k], space.dim(), "seq_convergence_check");
    norm_sup = std::max(norm_sup, associated_distance(space, w, sequence[k], limit));
    double worst = 0.0;
    for (std::size_t p = 0; p < space.pair_count(); ++p) {
      worst = std::max(worst, std::abs(space.eval(p, sequence[k]) - space.eval(p, limit)));
    }
    fn_sup = std::max(fn_sup, worst);
    r.distance_tail[k] = norm_sup;
    r.functional_tail[k] = fn_sup;
  }
  for (std::size_t k = 0; k < len; ++k) {
    if (!r.norm_index && r.distance_tail[k] <= tol) r.norm_index = k + 1;
    if (!r.functional_index && r.functional_tail[k] <= tol) r.functional_index = k + 1;
  }
  const std::size_t half = (len + 1) / 2;
  r.norm_converged = r.norm_index && *r.norm_index <= half;
  r.functional_converged = r.functional_index && *r.functional_index <= half;
  return r;
}

}  // namespace sunlab
