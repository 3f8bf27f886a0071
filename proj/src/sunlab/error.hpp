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

#ifndef SUNLAB_ERROR_HPP
#define SUNLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sunlab {

// Numeric values are mirrored by sunlab_status in the C header.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kDimensionMismatch = 2,
  kNotSymmetric = 3,
  kDegenerate = 4,
  kDuplicateFunctionals = 5,
  kTooLarge = 6,
  kWeightMismatch = 7,
  kDuplicatePoints = 8,
  kEmptyCloud = 9,
  kEndpointNotInCloud = 10,
  kNotFound = 11,
  kNotANearestPoint = 12,
  kQueryInCloud = 13,
  kNoCandidate = 14,
  kParseError = 15,
  kIoError = 16,
  kInternal = 17,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace sunlab

#endif  // SUNLAB_ERROR_HPP
