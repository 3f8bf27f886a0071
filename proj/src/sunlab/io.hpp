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

// JSON and CSV encodings of the library's value types.
//
//   Space      {"dim": n, "functionals": [[...], ...], "name": "..."}
//   Weights    {"alphas": [...]} or {"scheme": "geometric" | "uniform"}
//   PointCloud {"points": [[...], ...]}, or CSV with one point per row
//   Embedding  {"source": Space, "indices": [i1, ...]}

#ifndef SUNLAB_IO_HPP
#define SUNLAB_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "sunlab/cloud.hpp"
#include "sunlab/embed.hpp"
#include "sunlab/metric.hpp"
#include "sunlab/space.hpp"

namespace sunlab::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; throws kParseError with line and column on bad input.
Json parse_json(std::string_view text, std::string_view source = "input");

Vector vector_from_json(const Json& j, std::string_view what);
Json vector_to_json(VecView v);

Space space_from_json(const Json& j);
Json space_to_json(const Space& space);

/// A builtin shorthand ("linf2") or a Space object.
Space space_from_spec(const Json& j);

Weights weights_from_json(const Json& j, const Space& space);
Json weights_to_json(const Weights& w);

PointCloud cloud_from_json(const Json& j);
PointCloud cloud_from_csv(std::string_view text);
Json cloud_to_json(const PointCloud& cloud);

Embedding embedding_from_json(const Json& j);
Json embedding_to_json(const Embedding& e);

}  // namespace sunlab::io

#endif  // SUNLAB_IO_HPP
