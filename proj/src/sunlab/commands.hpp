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


// Experiment drivers behind the command-line tool and `sunlab_run`.
//
// A configuration is a JSON object. Recognised keys:
//   space    builtin name ("linf2", "l1_3"), path to a Space JSON file, or an
//            inline Space object
//   cloud    path to a JSON or CSV point file, or an inline {"points": ...}
//   weights  "geometric", "uniform", a path, or an inline Weights object
//   x, y     points; from, to  cloud indices
//   seed, trials, tol, eps, step, scale, lambda_max, grid, balls, hull,
//   strict, indices
// Every report records the tool, its version, the command, the seed and the
// configuration exactly as given.

#ifndef SUNLAB_COMMANDS_HPP
#define SUNLAB_COMMANDS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sunlab/io.hpp"

namespace sunlab {

inline constexpr std::string_view kToolName = "sunlab";
inline constexpr std::string_view kToolVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFalsified = 2;

struct CommandResult {
  int exit_code = kExitOk;
  io::Json report;
  /// The report as pretty-printed JSON with a trailing newline.
  std::string text() const;
};

const std::vector<std::string>& command_names();

/// Throws sunlab::Error on usage or input errors.
CommandResult run_command(std::string_view command, const io::Json& config);

/// A static SVG figure for reports of two-dimensional runs. Throws
/// kInvalidArgument when the report carries no figure.
std::string render_svg(const io::Json& report);

}  // namespace sunlab

#endif  // SUNLAB_COMMANDS_HPP
