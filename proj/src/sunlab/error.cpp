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

#include "sunlab/error.hpp"

namespace sunlab {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kDegenerate: return "Degenerate";
    case ErrorCode::kDuplicateFunctionals: return "DuplicateFunctionals";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kWeightMismatch: return "WeightMismatch";
    case ErrorCode::kDuplicatePoints: return "DuplicatePoints";
    case ErrorCode::kEmptyCloud: return "EmptyCloud";
    case ErrorCode::kEndpointNotInCloud: return "EndpointNotInCloud";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kNotANearestPoint: return "NotANearestPoint";
    case ErrorCode::kQueryInCloud: return "QueryInCloud";
    case ErrorCode::kNoCandidate: return "NoCandidate";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace sunlab
