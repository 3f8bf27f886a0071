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

#include "sunlab/space.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "sunlab/geometry.hpp"

namespace sunlab {

namespace {

bool first_nonzero_positive(const Vector& f) {
  for (double c : f) {
    if (c != 0.0) return c > 0.0;
  }
  return false;
}

bool lex_greater(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::string describe(const Vector& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(f[i]);
  }
  return s + ")";
}

}  // namespace

double Space::norm(VecView x) const {
  require_dim(x, dim(), "norm");
  double best = 0.0;
  for (std::size_t i = 0; i < pair_count(); ++i) {
    best = std::max(best, std::abs(eval(i, x)));
  }
  return best;
}

double Space::distance(VecView a, VecView b) const {
  require_dim(a, dim(), "distance");
  require_dim(b, dim(), "distance");
  double best = 0.0;
  for (std::size_t p = 0; p < pair_count(); ++p) {
    const Vector& f = representative(p);
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * (a[i] - b[i]);
    best = std::max(best, std::abs(s));
  }
  return best;
}

bool Space::operator==(const Space& other) const {
  return dim() == other.dim() && functionals() == other.functionals();
}

Space make_space(std::vector<Vector> functionals, std::string name,
                 const SpaceOptions& options) {
  if (functionals.empty()) fail(ErrorCode::kInvalidArgument, "make_space: empty functional family");
  const std::size_t dim = functionals[0].size();
  if (dim == 0) fail(ErrorCode::kInvalidArgument, "make_space: functionals must have positive dimension");
  for (auto& f : functionals) {
    if (f.size() != dim) {
      fail(ErrorCode::kDimensionMismatch,
           "make_space: functional " + describe(f) + " has dimension " +
               std::to_string(f.size()) + ", expected " + std::to_string(dim));
    }
    if (!all_finite(f)) fail(ErrorCode::kInvalidArgument, "make_space: non-finite functional");
    f = canonical_zero(std::move(f));
  }

  std::sort(functionals.begin(), functionals.end(), lex_greater);
  for (std::size_t i = 1; i < functionals.size(); ++i) {
    if (functionals[i] == functionals[i - 1]) {
      fail(ErrorCode::kDuplicateFunctionals,
           "make_space: duplicate functional " + describe(functionals[i]));
    }
  }

  std::vector<Vector> reps;
  for (const auto& f : functionals) {
    if (std::all_of(f.begin(), f.end(), [](double c) { return c == 0.0; })) {
      fail(ErrorCode::kDegenerate, "make_space: zero functional");
    }
    const Vector neg = negated(f);
    if (!std::binary_search(functionals.begin(), functionals.end(), neg, lex_greater)) {
      fail(ErrorCode::kNotSymmetric,
           "make_space: functional " + describe(f) + " has no antipode");
    }
    if (first_nonzero_positive(f)) reps.push_back(f);
  }

  // A symmetric family positively spans R^n iff it spans R^n: any x with
  // f(x) <= 0 for all f in F = -F has f(x) = 0 for all f.
  if (geometry::rank(reps) < dim) {
    fail(ErrorCode::kDegenerate,
         "make_space: functionals do not span R^" + std::to_string(dim) +
             "; some nonzero x has max f(x) = 0");
  }

  std::size_t pruned = 0;
  if (options.prune_nonextreme && reps.size() > 1) {
    std::vector<Vector> kept;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      std::vector<Vector> shifted;
      shifted.reserve(functionals.size() - 1);
      for (const auto& g : functionals) {
        if (g == reps[i]) continue;
        shifted.push_back(sub(g, reps[i]));
      }
      const double gap = geometry::min_norm_in_hull(shifted);
      const double scale = std::sqrt(dot(reps[i], reps[i]));
      if (gap > 1e-9 * scale) {
        kept.push_back(reps[i]);
      } else {
        pruned += 2;
      }
    }
    reps = std::move(kept);
  }

  auto data = std::make_shared<Space::Data>();
  data->dim = dim;
  data->name = std::move(name);
  data->pruned = pruned;
  for (const auto& r : reps) {
    data->functionals.push_back(r);
    data->functionals.push_back(negated(r));
  }
  return Space(std::move(data));
}

Space builtin_space(std::string_view family, std::size_t n, std::size_t budget) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "builtin: dimension must be positive");
  auto data = std::make_shared<Space::Data>();
  data->dim = n;
  if (family == "linf") {
    if (2 * n > budget) fail(ErrorCode::kTooLarge, "builtin: linf family exceeds functional budget");
    data->name = "linf(" + std::to_string(n) + ")";
    for (std::size_t i = 0; i < n; ++i) {
      Vector e(n, 0.0);
      e[i] = 1.0;
      data->functionals.push_back(e);
      data->functionals.push_back(negated(e));
    }
  } else if (family == "l1") {
    if (n >= 63 || (std::size_t{1} << n) > budget) {
      fail(ErrorCode::kTooLarge, "builtin: l1(" + std::to_string(n) + ") needs 2^" +
                                     std::to_string(n) + " functionals, over budget " +
                                     std::to_string(budget));
    }
    data->name = "l1(" + std::to_string(n) + ")";
    // Representatives have first coordinate +1; descending lexicographic
    // order means '+' before '-' in the remaining coordinates.
    const std::size_t half = std::size_t{1} << (n - 1);
    for (std::size_t mask = 0; mask < half; ++mask) {
      Vector s(n, 1.0);
      for (std::size_t i = 1; i < n; ++i) {
        if (mask >> (n - 1 - i) & 1U) s[i] = -1.0;
      }
      data->functionals.push_back(s);
      data->functionals.push_back(negated(s));
    }
  } else {
    fail(ErrorCode::kInvalidArgument, "builtin: unknown family '" + std::string(family) +
                                          "' (expected linf or l1)");
  }
  return Space(std::move(data));
}

Space builtin_from_string(std::string_view spec, std::size_t budget) {
  std::string_view family;
  if (spec.rfind("linf", 0) == 0) {
    family = "linf";
  } else if (spec.rfind("l1", 0) == 0) {
    family = "l1";
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown space '" + std::string(spec) + "'");
  }
  std::string_view rest = spec.substr(family.size());
  if (!rest.empty() && (rest[0] == '_' || rest[0] == ':' || rest[0] == '-')) rest.remove_prefix(1);
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size()) {
    fail(ErrorCode::kInvalidArgument,
         "space '" + std::string(spec) + "': expected e.g. linf2, l1_3 or linf:4");
  }
  return builtin_space(family, n, budget);
}

bool ball_contains(const Ball& ball, const Space& space, VecView x, double tol) {
  require_dim(ball.center, space.dim(), "ball_contains (center)");
  require_dim(x, space.dim(), "ball_contains");
  if (ball.radius < 0.0) fail(ErrorCode::kInvalidArgument, "ball_contains: negative radius");
  return space.distance(x, ball.center) <= ball.radius + tol;
}

}  // namespace sunlab
