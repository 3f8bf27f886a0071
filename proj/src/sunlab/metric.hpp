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

// The associated norm |x| = sum_i alpha_i |f_i(x)|, metric betweenness under
// it, discrete geodesics through point clouds and monotonicity of paths.

#ifndef SUNLAB_METRIC_HPP
#define SUNLAB_METRIC_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sunlab/cloud.hpp"
#include "sunlab/space.hpp"

namespace sunlab {

/// Positive coefficients, one per antipodal functional pair.
class Weights {
 public:
  /// Throws kInvalidArgument unless every alpha is finite and > 0.
  explicit Weights(std::vector<double> alphas);

  const std::vector<double>& alphas() const { return alphas_; }
  std::size_t size() const { return alphas_.size(); }
  double sum() const { return sum_; }
  double min() const { return min_; }

  /// alpha_i = 2^-(i+1), normalised to sum 1.
  static Weights geometric(std::size_t count);
  /// alpha_i = 1 / count.
  static Weights uniform(std::size_t count);
  /// "geometric" or "uniform".
  static Weights scheme(std::string_view name, std::size_t count);

 private:
  std::vector<double> alphas_;
  double sum_ = 0.0;
  double min_ = 0.0;
};

inline constexpr double kBetweenTolerance = 1e-9;

/// Throws kWeightMismatch when the weight count differs from the pair count.
double associated_norm(const Space& space, const Weights& w, VecView x);

/// |x - y| computed without materialising the difference.
double associated_distance(const Space& space, const Weights& w, VecView a, VecView b);

/// |x - z| + |z - y| - |x - y|.
double between_defect(const Space& space, const Weights& w, VecView x, VecView z, VecView y);

bool is_between(const Space& space, const Weights& w, VecView x, VecView z, VecView y,
                double tol = kBetweenTolerance);

/// Per-functional additivity |f(x) - f(y)| = |f(x) - f(z)| + |f(z) - f(y)| for
/// every representative f, within tol.
bool functionals_additive(const Space& space, VecView x, VecView z, VecView y,
                          double tol = kBetweenTolerance);

struct EquivalenceReport {
  std::size_t trials = 0;
  std::size_t disagreements = 0;
  std::size_t interval_hits = 0;  // triples with z in [[x, y]]
  std::size_t functional_hits = 0;
  std::size_t between_hits = 0;
  struct Witness {
    Vector x, z, y;
    bool interval = false;
    bool functional = false;
    bool between = false;
  };
  std::optional<Witness> first_disagreement;
};

/// Draws random triples and compares three membership predicates: interval
/// membership, per-functional additivity and associated-norm additivity. The
/// sampler deliberately places many z inside [[x, y]] and on its boundary.
EquivalenceReport between_equiv_check(const Space& space, const Weights& w, std::size_t trials,
                                      std::uint64_t seed, double tol = kBetweenTolerance);

struct WeightedEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  double weight = 0.0;
};

struct BetweennessGraph {
  std::size_t vertices = 0;
  double eps = 0.0;
  std::vector<WeightedEdge> edges;  // i < j, lexicographic
};

/// Complete graph on the cloud with edge weights |u - v|.
BetweennessGraph betweenness_graph(const Space& space, const Weights& w, const PointCloud& cloud,
                                   double eps);

struct FunctionalVerdict {
  bool nondecreasing = false;
  bool nonincreasing = false;
  double worst_backstep = 0.0;  // largest step against the path's net direction
  bool monotone() const { return nondecreasing || nonincreasing; }
};

struct MonotonicityReport {
  std::vector<FunctionalVerdict> functionals;  // one per pair
  bool monotone = true;
};

inline constexpr double kMonotoneTolerance = 1e-6;

/// A functional passes when every step against its direction is at most
/// tol * (1 + |f(end - start)|).
MonotonicityReport check_monotone(const Space& space, const std::vector<Vector>& points,
                                  double tol = kMonotoneTolerance);

struct Path {
  std::vector<Vector> points;
  std::vector<std::size_t> indices;  // into the source cloud
  MonotonicityReport monotonicity;
};

struct PathOptions {
  // Allowed excess of the path length over |x - y|; unset means 1e-6 |x - y|.
  std::optional<double> eps;
  // Longest admissible step in the space norm; unset means net_spacing.
  std::optional<double> step;
  double monotone_tol = kMonotoneTolerance;
};

struct PathResult {
  bool found = false;
  std::optional<Path> path;  // the minimal-length path, when one exists
  double length = 0.0;       // minimal length (infinity when disconnected)
  double target = 0.0;       // |x - y|
  double eps = 0.0;
  double step = 0.0;
  double defect() const { return length - target; }
};

/// Shortest |.|-path from x to y through cloud points using steps no longer
/// than the net step; found when its length is within eps of |x - y|.
/// Throws kEndpointNotInCloud.
PathResult monotone_path(const Space& space, const Weights& w, const PointCloud& cloud,
                         VecView x, VecView y, const PathOptions& options = {});

struct ConvergenceReport {
  std::size_t length = 0;
  double tol = 0.0;
  std::vector<double> distance_tail;  // sup over m >= n of |x_m - x|
  std::vector<double> functional_tail;  // sup over m >= n, i of |f_i(x_m) - f_i(x)|
  std::optional<std::size_t> norm_index;        // first 1-based n with tail <= tol
  std::optional<std::size_t> functional_index;
  bool norm_converged = false;
  bool functional_converged = false;
  bool agree() const { return norm_converged == functional_converged; }
};

/// Compares associated-norm convergence with convergence of every functional
/// on a finite prefix. A criterion counts as converged when its tail drops
/// below tol within the first half of the prefix and stays there.
ConvergenceReport seq_convergence_check(const Space& space, const Weights& w,
                                        const std::vector<Vector>& sequence, VecView limit,
                                        double tol);

}  // namespace sunlab

#endif  // SUNLAB_METRIC_HPP
