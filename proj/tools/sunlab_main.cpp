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


// sunlab: command-line front end over the C API.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sunlab/sunlab.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;

struct Options {
  std::optional<std::string> space, cloud, weights, hull, x, y, indices;
  std::optional<double> tol, lambda_max, eps, step, scale;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials, grid, from, to, balls;
  bool strict = false;
  std::string out, svg;
};

// "1,2.5" or "[1, 2.5]".
std::optional<Json> parse_list(const std::string& text, bool integers) {
  std::string s = text;
  for (char& c : s) {
    if (c == '[' || c == ']' || c == ';') c = ' ';
  }
  Json out = Json::array();
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string cell = s.substr(pos, comma - pos);
    const auto b = cell.find_first_not_of(" \t");
    if (b == std::string::npos) return std::nullopt;
    const std::string trimmed = cell.substr(b, cell.find_last_not_of(" \t") - b + 1);
    char* end = nullptr;
    if (integers) {
      if (trimmed[0] == '-') return std::nullopt;
      const unsigned long long v = std::strtoull(trimmed.c_str(), &end, 10);
      if (*end != '\0') return std::nullopt;
      out.push_back(v);
    } else {
      const double v = std::strtod(trimmed.c_str(), &end);
      if (*end != '\0') return std::nullopt;
      out.push_back(v);
    }
    pos = comma + 1;
  }
  return out;
}

Json build_config(const Options& o) {
  Json c = Json::object();
  if (o.space) c["space"] = *o.space;
  if (o.cloud) c["cloud"] = *o.cloud;
  if (o.weights) c["weights"] = *o.weights;
  const auto point = [&](const char* key, const std::optional<std::string>& v, bool integers) {
    if (!v) return;
    auto parsed = parse_list(*v, integers);
    if (!parsed) throw CLI::ValidationError(std::string("--") + key, "expected a comma-separated list of numbers");
    c[key] = std::move(*parsed);
  };
  point("x", o.x, false);
  point("y", o.y, false);
  if (o.from) c["from"] = *o.from;
  if (o.to) c["to"] = *o.to;
  point("indices", o.indices, true);
  if (o.seed) c["seed"] = *o.seed;
  if (o.trials) c["trials"] = *o.trials;
  if (o.tol) c["tol"] = *o.tol;
  if (o.eps) c["eps"] = *o.eps;
  if (o.step) c["step"] = *o.step;
  if (o.scale) c["scale"] = *o.scale;
  if (o.lambda_max) c["lambda_max"] = *o.lambda_max;
  if (o.grid) c["grid"] = *o.grid;
  if (o.balls) c["balls"] = *o.balls;
  if (o.hull) c["hull"] = *o.hull;
  if (o.strict) c["strict"] = true;
  return c;
}

bool write_atomic(const std::string& path, const std::string& body) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << body;
    out.flush();
    if (!out) return false;
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polyhedral-norm geometry: intervals, ball hulls, monotone paths and suns"};
  app.set_version_flag("--version", sunlab_version());
  app.require_subcommand(1);
  Options o;

  const auto add_space = [&](CLI::App* s) {
    s->add_option("--space", o.space, "builtin (linf2, l1_3) or Space JSON file")->required();
  };
  const auto add_cloud = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--cloud", o.cloud, "point cloud file (JSON or .csv)");
    if (required) opt->required();
  };
  const auto add_point = [&](CLI::App* s, const char* name, std::optional<std::string>& v,
                             bool required) {
    auto* opt = s->add_option(std::string("--") + name, v, "point as comma-separated coordinates");
    if (required) opt->required();
  };
  const auto add_seed = [&](CLI::App* s) { s->add_option("--seed", o.seed, "random seed"); };
  const auto add_tol = [&](CLI::App* s) {
    s->add_option("--tol", o.tol, "tolerance")->check(CLI::PositiveNumber);
  };
  const auto add_outputs = [&](CLI::App* s) {
    s->add_option("--out", o.out, "write the JSON report here instead of stdout");
    s->add_option("--svg", o.svg, "also draw a figure (two-dimensional runs)");
  };

  auto* interval = app.add_subcommand("interval", "functional interval of two points");
  add_space(interval);
  add_point(interval, "x", o.x, true);
  add_point(interval, "y", o.y, true);
  add_cloud(interval, false);

  auto* hull = app.add_subcommand("hull", "sampled ball hull against the interval");
  add_space(hull);
  add_point(hull, "x", o.x, true);
  add_point(hull, "y", o.y, true);
  hull->add_option("--balls", o.balls, "number of sampled balls (default 2000)");
  hull->add_option("--grid", o.grid, "grid points per axis");
  add_tol(hull);
  add_seed(hull);

  auto* mconnect = app.add_subcommand("mconnect", "test whether a cloud is m-connected");
  add_space(mconnect);
  add_cloud(mconnect, true);
  mconnect->add_option("--scale", o.scale, "resolution scale (default: net spacing; 0: exact)");
  mconnect->add_option("--hull", o.hull, "interval or oracle")
      ->check(CLI::IsMember({"interval", "oracle"}));
  mconnect->add_option("--balls", o.balls, "balls per oracle hull");
  add_tol(mconnect);
  add_seed(mconnect);

  auto* path = app.add_subcommand("path", "shortest monotone path through a cloud");
  add_space(path);
  add_cloud(path, true);
  path->add_option("--weights", o.weights, "geometric, uniform, or Weights JSON file");
  path->add_option("--from", o.from, "start index in the cloud");
  path->add_option("--to", o.to, "end index in the cloud");
  add_point(path, "x", o.x, false);
  add_point(path, "y", o.y, false);
  path->add_option("--eps", o.eps, "allowed length excess (default 1e-6 |x-y|)");
  path->add_option("--step", o.step, "longest step (default: net spacing)");
  add_tol(path);

  auto* project = app.add_subcommand("project", "nearest cloud points");
  add_space(project);
  add_cloud(project, true);
  add_point(project, "x", o.x, true);
  add_tol(project);

  auto* sun = app.add_subcommand("sun", "search for sun falsifiers");
  add_space(sun);
  add_cloud(sun, true);
  add_point(sun, "x", o.x, false);
  sun->add_option("--lambda-max", o.lambda_max, "largest lambda (default 16)")->check(CLI::PositiveNumber);
  sun->add_option("--grid", o.grid, "lambda grid size (default 256)");
  sun->add_option("--trials", o.trials, "random queries when --x is absent (default 100)");
  sun->add_flag("--strict", o.strict, "require every nearest point to pass");
  add_tol(sun);
  add_seed(sun);

  auto* embed = app.add_subcommand("embed", "coordinate embedding into linf");
  add_space(embed);
  embed->add_option("--indices", o.indices, "functional pairs, e.g. 0,2 (default: all)");
  add_point(embed, "x", o.x, false);
  add_cloud(embed, false);
  embed->add_option("--trials", o.trials, "orderings for the norm trace (default 4)");
  add_seed(embed);

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--trials", o.trials, "trials per space (default 1000)");
  add_tol(verify);
  add_seed(verify);

  for (auto* s : {interval, hull, mconnect, path, project, sun, embed, verify}) add_outputs(s);

  std::string config;
  try {
    app.parse(argc, argv);
    config = build_config(o).dump();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  char* report = nullptr;
  int exit_code = 0;
  const sunlab_status status = sunlab_run(command.c_str(), config.c_str(), &report, &exit_code);
  if (status != SUNLAB_OK) {
    std::cerr << "sunlab: " << sunlab_status_name(status) << ": " << sunlab_last_error() << "\n";
    return kExitUsage;
  }
  const std::string body(report);

  if (o.out.empty()) {
    std::cout << body;
    std::cout.flush();
  } else if (!write_atomic(o.out, body)) {
    std::cerr << "sunlab: cannot write '" << o.out << "'\n";
    sunlab_string_free(report);
    return kExitUsage;
  }

  if (!o.svg.empty()) {
    char* svg = nullptr;
    if (sunlab_render_svg(report, &svg) == SUNLAB_OK) {
      if (!write_atomic(o.svg, svg)) std::cerr << "sunlab: warning: cannot write '" << o.svg << "'\n";
      sunlab_string_free(svg);
    } else {
      std::cerr << "sunlab: warning: no figure drawn: " << sunlab_last_error() << "\n";
    }
  }
  sunlab_string_free(report);
  return exit_code;
}
