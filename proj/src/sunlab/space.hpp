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

#ifndef SUNLAB_SPACE_HPP
#define SUNLAB_SPACE_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sunlab/vec.hpp"

namespace sunlab {

struct SpaceOptions {
  // Drop functionals lying in the convex hull of the others. Such functionals
  // do not change the norm but would make intervals too small.
  bool prune_nonextreme = true;
};

/// A polyhedral normed space on R^n, described by the extreme points of its
/// dual unit ball. The norm is ||x|| = max_f f(x) over that symmetric family.
///
/// Functionals are kept in antipodal pairs. Each pair has a representative
/// whose first nonzero coordinate is positive; pairs are sorted by descending
/// lexicographic order of their representatives, so the stored order does not
/// depend on the order in which the functionals were supplied. Pair i occupies
/// functionals()[2i] (the representative) and functionals()[2i+1] (its
/// negation).
///
/// Space is an immutable value; copies share storage.
class Space {
 public:
  std::size_t dim() const { return data_->dim; }
  const std::string& name() const { return data_->name; }

  const std::vector<Vector>& functionals() const { return data_->functionals; }
  std::size_t pair_count() const { return data_->functionals.size() / 2; }
  const Vector& representative(std::size_t pair) const {
    return data_->functionals[2 * pair];
  }

  // Number of supplied functionals dropped because they were not extreme.
  std::size_t pruned_count() const { return data_->pruned; }

  // f_pair(x) for the representative of `pair`.
  double eval(std::size_t pair, VecView x) const {
    return dot(representative(pair), x);
  }

  double norm(VecView x) const;

  // ||a - b|| without materialising the difference.
  double distance(VecView a, VecView b) const;

  bool operator==(const Space& other) const;

 private:
  struct Data {
    std::size_t dim = 0;
    std::vector<Vector> functionals;
    std::string name;
    std::size_t pruned = 0;
  };
  explicit Space(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;

  friend Space make_space(std::vector<Vector>, std::string,
                          const SpaceOptions&);
  friend Space builtin_space(std::string_view, std::size_t, std::size_t);
};

/// Validates and canonicalises a functional family.
/// Throws kDimensionMismatch, kNotSymmetric, kDuplicateFunctionals or
/// kDegenerate (the family does not define a norm).
Space make_space(std::vector<Vector> functionals, std::string name = {},
                 const SpaceOptions& options = {});

inline constexpr std::size_t kDefaultFunctionalBudget = std::size_t{1} << 20;

/// "linf" gives the 2n coordinate functionals, "l1" the 2^n sign vectors.
/// Throws kTooLarge when the family would exceed `budget`.
Space builtin_space(std::string_view family, std::size_t n,
                    std::size_t budget = kDefaultFunctionalBudget);

/// Parses shorthand such as "linf2", "l1_3" or "linf:4".
Space builtin_from_string(std::string_view spec,
                          std::size_t budget = kDefaultFunctionalBudget);

struct Ball {
  Vector center;
  double radius = 0.0;
};

inline constexpr double kBallTolerance = 1e-12;

bool ball_contains(const Ball& ball, const Space& space, VecView x,
                   double tol = kBallTolerance);

}  // namespace sunlab

#endif  // SUNLAB_SPACE_HPP
