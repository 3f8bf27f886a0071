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


#include "sunlab/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "sunlab/approx.hpp"
#include "sunlab/embed.hpp"
#include "sunlab/fixtures.hpp"
#include "sunlab/geometry.hpp"
#include "sunlab/hull.hpp"
#include "sunlab/metric.hpp"
#include "sunlab/random.hpp"

namespace sunlab {

using io::Json;

namespace {

// ---------------------------------------------------------------------------
// Configuration access

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(ErrorCode::kIoError, "cannot read '" + path + "'");
  return ss.str();
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool looks_like_path(const std::string& s) {
  return ends_with(s, ".json") || ends_with(s, ".csv") || s.find('/') != std::string::npos ||
         std::filesystem::exists(s);
}

[[noreturn]] void bad_key(std::string_view key, std::string_view expected) {
  fail(ErrorCode::kInvalidArgument,
       "config \"" + std::string(key) + "\": expected " + std::string(expected));
}

class Config {
 public:
  explicit Config(const Json& j) : j_(j) {
    if (!j_.is_object()) fail(ErrorCode::kInvalidArgument, "config must be a JSON object");
  }

  bool has(std::string_view key) const {
    return j_.contains(key) && !j_.at(std::string(key)).is_null();
  }
  const Json& at(std::string_view key) const { return j_.at(std::string(key)); }

  double number(std::string_view key, double fallback) const {
    if (!has(key)) return fallback;
    if (!at(key).is_number()) bad_key(key, "a number");
    return at(key).get<double>();
  }

  double positive(std::string_view key, double fallback) const {
    const double v = number(key, fallback);
    if (!(v > 0.0) || !std::isfinite(v)) bad_key(key, "a positive number");
    return v;
  }

  std::optional<double> optional_nonnegative(std::string_view key) const {
    if (!has(key)) return std::nullopt;
    const double v = number(key, 0.0);
    if (!(v >= 0.0)) bad_key(key, "a nonnegative number");
    return v;
  }

  std::size_t count(std::string_view key, std::size_t fallback) const {
    if (!has(key)) return fallback;
    if (!at(key).is_number_unsigned()) bad_key(key, "a nonnegative integer");
    return at(key).get<std::size_t>();
  }

  std::uint64_t seed() const {
    if (!has("seed")) return 0;
    if (!at("seed").is_number_unsigned()) bad_key("seed", "a nonnegative integer");
    return at("seed").get<std::uint64_t>();
  }

  bool flag(std::string_view key) const {
    if (!has(key)) return false;
    if (!at(key).is_boolean()) bad_key(key, "true or false");
    return at(key).get<bool>();
  }

  std::string text(std::string_view key, std::string_view fallback) const {
    if (!has(key)) return std::string(fallback);
    if (!at(key).is_string()) bad_key(key, "a string");
    return at(key).get<std::string>();
  }

  Vector point(std::string_view key, std::size_t dim) const {
    if (!has(key)) fail(ErrorCode::kInvalidArgument, "config: missing \"" + std::string(key) + "\"");
    Vector v = io::vector_from_json(at(key), key);
    const std::string what(key);
    require_dim(v, dim, what.c_str());
    if (!all_finite(v)) bad_key(key, "finite coordinates");
    return v;
  }

  Space space() const {
    if (!has("space")) fail(ErrorCode::kInvalidArgument, "config: missing \"space\"");
    const Json& s = at("space");
    if (s.is_string()) {
      const std::string name = s.get<std::string>();
      if (looks_like_path(name)) return io::space_from_json(io::parse_json(read_file(name), name));
      return builtin_from_string(name);
    }
    return io::space_from_json(s);
  }

  PointCloud cloud() const {
    if (!has("cloud")) fail(ErrorCode::kInvalidArgument, "config: missing \"cloud\"");
    const Json& c = at("cloud");
    if (c.is_string()) {
      const std::string path = c.get<std::string>();
      const std::string body = read_file(path);
      if (ends_with(path, ".csv")) return io::cloud_from_csv(body);
      return io::cloud_from_json(io::parse_json(body, path));
    }
    return io::cloud_from_json(c);
  }

  Weights weights(const Space& space) const {
    if (!has("weights")) return Weights::geometric(space.pair_count());
    const Json& w = at("weights");
    if (w.is_string()) {
      const std::string name = w.get<std::string>();
      if (looks_like_path(name)) {
        return io::weights_from_json(io::parse_json(read_file(name), name), space);
      }
      return Weights::scheme(name, space.pair_count());
    }
    return io::weights_from_json(w, space);
  }

 private:
  const Json& j_;
};

void require_cloud_dim(const Space& space, const PointCloud& cloud) {
  if (cloud.empty()) fail(ErrorCode::kEmptyCloud, "the cloud has no points");
  if (cloud.dim() != space.dim()) {
    fail(ErrorCode::kDimensionMismatch, "cloud dimension " + std::to_string(cloud.dim()) +
                                            " does not match space dimension " +
                                            std::to_string(space.dim()));
  }
}

std::size_t cloud_index(const Config& cfg, std::string_view key, const PointCloud& cloud) {
  const std::size_t i = cfg.count(key, std::numeric_limits<std::size_t>::max());
  if (i >= cloud.size()) {
    fail(ErrorCode::kInvalidArgument, "config \"" + std::string(key) + "\": expected a cloud index below " +
                                          std::to_string(cloud.size()));
  }
  return i;
}

// ---------------------------------------------------------------------------
// Report pieces

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json points_json(const std::vector<Vector>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(io::vector_to_json(p));
  return out;
}

Json report_header(std::string_view command, const Json& config, std::uint64_t seed) {
  Json r;
  r["tool"] = kToolName;
  r["version"] = kToolVersion;
  r["command"] = command;
  r["seed"] = seed;
  r["config"] = config;
  return r;
}

std::vector<Vector> polygon_of(const SlabPolytope& box) {
  auto v = box.vertices();
  if (box.space().dim() == 2) v = geometry::sort_polygon(std::move(v));
  return v;
}

std::string verdict_name(const FunctionalVerdict& v) {
  if (v.nondecreasing && v.nonincreasing) return "constant";
  if (v.nondecreasing) return "nondecreasing";
  if (v.nonincreasing) return "nonincreasing";
  return "not monotone";
}

Json sun_report_json(const SunReport& r, const PointCloud& cloud) {
  Json j;
  j["x"] = io::vector_to_json(r.x);
  j["y"] = io::vector_to_json(cloud[r.y]);
  j["y_index"] = r.y;
  j["lambda_max"] = r.lambda_max;
  j["grid"] = r.grid;
  j["verdict"] = r.holds() ? "holds-on-grid" : "falsified";
  if (r.falsifier) {
    Json f;
    f["lambda"] = r.falsifier->lambda;
    f["competitor"] = io::vector_to_json(cloud[r.falsifier->competitor]);
    f["competitor_index"] = r.falsifier->competitor;
    f["y_distance"] = r.falsifier->y_distance;
    f["competitor_distance"] = r.falsifier->competitor_distance;
    j["falsifier"] = std::move(f);
  } else {
    j["falsifier"] = nullptr;
  }
  return j;
}

Json luminosity_json(const Vector& x, const LuminosityResult& lr, const PointCloud& cloud) {
  Json j;
  j["x"] = io::vector_to_json(x);
  j["verdict"] = lr.found() ? "holds-on-grid" : "falsified";
  j["accepted"] = lr.accepted ? Json(*lr.accepted) : Json(nullptr);
  Json reports = Json::array();
  for (const auto& r : lr.reports) reports.push_back(sun_report_json(r, cloud));
  j["reports"] = std::move(reports);
  return j;
}

// Figure data for two-dimensional runs; render_svg draws it.
struct Figure {
  std::vector<Vector> cloud;
  std::vector<std::vector<Vector>> polygons;
  std::vector<Vector> highlight;
  std::vector<Vector> path;
  bool path_monotone = true;
  std::vector<std::pair<Vector, std::string>> functionals;

  Json to_json() const {
    Json j;
    j["cloud"] = points_json(cloud);
    Json polys = Json::array();
    for (const auto& p : polygons) polys.push_back(points_json(p));
    j["polygons"] = std::move(polys);
    j["highlight"] = points_json(highlight);
    if (!path.empty()) {
      Json p;
      p["points"] = points_json(path);
      p["monotone"] = path_monotone;
      Json fs = Json::array();
      for (const auto& [f, verdict] : functionals) {
        fs.push_back(Json{{"functional", io::vector_to_json(f)}, {"verdict", verdict}});
      }
      p["functionals"] = std::move(fs);
      j["path"] = std::move(p);
    }
    return j;
  }
};

// ---------------------------------------------------------------------------
// Commands

CommandResult cmd_interval(const Json& config) {
  const Config cfg(config);
  const Space space = cfg.space();
  const Vector x = cfg.point("x", space.dim());
  const Vector y = cfg.point("y", space.dim());
  const auto box = interval(space, x, y);

  Json result;
  result["space"] = space.name();
  result["x"] = io::vector_to_json(x);
  result["y"] = io::vector_to_json(y);
  result["distance"] = space.distance(x, y);
  Json slabs = Json::array();
  for (const auto& s : box.slabs()) {
    slabs.push_back(Json{{"pair", s.pair},
                         {"functional", io::vector_to_json(space.representative(s.pair))},
                         {"lo", s.lo},
                         {"hi", s.hi}});
  }
  result["slabs"] = std::move(slabs);
  const auto vertices = polygon_of(box);
  result["vertices"] = points_json(vertices);
  const auto bb = box.bounding_box();
  result["bounding_box"] = Json{{"lo", io::vector_to_json(bb.lo)}, {"hi", io::vector_to_json(bb.hi)}};

  Figure fig;
  fig.polygons.push_back(vertices);
  fig.highlight = {x, y};
  if (cfg.has("cloud")) {
    const PointCloud cloud = cfg.cloud();
    require_cloud_dim(space, cloud);
    Json members = Json::array();
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      if (box.contains(cloud[i])) members.push_back(i);
    }
    result["members"] = std::move(members);
    fig.cloud = cloud.points();
  }
  if (space.dim() == 2) result["figure"] = fig.to_json();

  CommandResult out{kExitOk, report_header("interval", config, cfg.seed())};
  out.report["result"] = std::move(result);
  out.report["verdict"] = "ok";
  return out;
}

CommandResult cmd_hull(const Json& config) {
  const Config cfg(config);
  const Space space = cfg.space();
  const Vector x = cfg.point("x", space.dim());
  const Vector y = cfg.point("y", space.dim());
  const std::uint64_t seed = cfg.seed();
  const std::size_t n_balls = cfg.count("balls", 2000);
  const std::size_t ppa = cfg.count("grid", default_points_per_axis(space.dim()));
  const double tol = cfg.positive("tol", kSlabTolerance);

  const auto hull = ball_hull_outer(space, x, y, n_balls, seed, tol);
  const auto box = interval(space, x, y);
  const Grid grid = hull_grid(space, x, y, ppa);
  const auto gap = compare_on_grid(hull, box, grid, /*check_inclusion=*/true);
  const bool contained = gap.inclusion_violations == 0;

  Json result;
  result["pair"] = points_json({x, y});
  result["contained"] = contained;
  result["gap"] = gap.gap;
  result["witness"] = gap.violation_point ? io::vector_to_json(*gap.violation_point) : Json(nullptr);
  result["resolution"] = gap.resolution;
  result["gap_over_resolution"] = gap.resolution > 0.0 ? Json(gap.gap / gap.resolution) : Json(nullptr);
  result["worst_point"] = gap.worst_point ? io::vector_to_json(*gap.worst_point) : Json(nullptr);
  result["n_balls"] = n_balls;
  result["points_per_axis"] = ppa;
  result["tol"] = tol;
  result["grid_points"] = gap.grid_points;
  result["interval_points"] = gap.interval_points;
  result["hull_points"] = gap.hull_points;
  result["hull_only_points"] = gap.hull_only_points;
  result["inclusion_violations"] = gap.inclusion_violations;
  if (space.dim() == 2) {
    Figure fig;
    fig.polygons.push_back(polygon_of(box));
    fig.highlight = {x, y};
    if (gap.worst_point) fig.highlight.push_back(*gap.worst_point);
    result["figure"] = fig.to_json();
  }

  CommandResult out{contained ? kExitOk : kExitFalsified, report_header("hull", config, seed)};
  out.report["result"] = std::move(result);
  out.report["verdict"] = contained ? "interval contained in sampled hull" : "inclusion violated";
  return out;
}

CommandResult cmd_mconnect(const Json& config) {
  const Config cfg(config);
  const Space space = cfg.space();
  const PointCloud cloud = cfg.cloud();
  require_cloud_dim(space, cloud);
  MConnectOptions opts;
  const double scale = cfg.number("scale", -1.0);
  if (scale >= 0.0) opts.scale = scale;
  const std::string mode = cfg.text("hull", "interval");
  if (mode == "interval") {
    opts.mode = HullMode::kInterval;
  } else if (mode == "oracle") {
    opts.mode = HullMode::kOracle;
  } else {
    bad_key("hull", "\"interval\" or \"oracle\"");
  }
  opts.oracle_balls = cfg.count("balls", opts.oracle_balls);
  opts.seed = cfg.seed();
  opts.tol = cfg.positive("tol", kSlabTolerance);

  const auto r = m_connected(space, cloud, opts);
  Json result;
  result["m_connected"] = r.connected;
  if (r.witness) {
    const auto [i, j] = *r.witness;
    result["witness"] = Json{{"pair", {i, j}}, {"points", points_json({cloud[i], cloud[j]})}};
  } else {
    result["witness"] = nullptr;
  }
  result["scale"] = r.scale;
  result["hull"] = mode;
  result["cloud_size"] = cloud.size();
  result["pairs"] = r.pairs;
  result["resolved_pairs"] = r.resolved_pairs;
  if (space.dim() == 2) {
    Figure fig;
    fig.cloud = cloud.points();
    if (r.witness) {
      const auto& u = cloud[r.witness->first];
      const auto& v = cloud[r.witness->second];
      fig.polygons.push_back(polygon_of(interval(space, u, v)));
      fig.highlight = {u, v};
    }
    result["figure"] = fig.to_json();
  }

  const std::string summary = std::string("m-connected: ") + (r.connected ? "true" : "false");
  CommandResult out{r.connected ? kExitOk : kExitFalsified, report_header("mconnect", config, opts.seed)};
  out.report["result"] = std::move(result);
  out.report["verdict"] = summary;
  return out;
}

CommandResult cmd_path(const Json& config) {
  const Config cfg(config);
  const Space space = cfg.space();
  const PointCloud cloud = cfg.cloud();
  require_cloud_dim(space, cloud);
  const Weights w = cfg.weights(space);
  const Vector x = cfg.has("from") ? cloud[cloud_index(cfg, "from", cloud)] : cfg.point("x", space.dim());
  const Vector y = cfg.has("to") ? cloud[cloud_index(cfg, "to", cloud)] : cfg.point("y", space.dim());
  PathOptions opts;
  opts.eps = cfg.optional_nonnegative("eps");
  opts.step = cfg.optional_nonnegative("step");
  opts.monotone_tol = cfg.positive("tol", kMonotoneTolerance);

  const auto r = monotone_path(space, w, cloud, x, y, opts);
  Json result;
  result["found"] = r.found;
  result["from"] = io::vector_to_json(x);
  result["to"] = io::vector_to_json(y);
  result["length"] = number_or_null(r.length);
  result["target"] = r.target;
  result["defect"] = number_or_null(r.defect());
  result["eps"] = r.eps;
  result["step"] = r.step;
  result["weights"] = io::vector_to_json(w.alphas());
  bool monotone = false;
  if (r.path) {
    result["points"] = points_json(r.path->points);
    result["indices"] = r.path->indices;
    Json verdicts = Json::object();
    for (std::size_t p = 0; p < r.path->monotonicity.functionals.size(); ++p) {
      const auto& v = r.path->monotonicity.functionals[p];
      verdicts[std::to_string(p)] = Json{{"functional", io::vector_to_json(space.representative(p))},
                                         {"verdict", verdict_name(v)},
                                         {"worst_backstep", v.worst_backstep}};
    }
    result["monotone"] = std::move(verdicts);
    monotone = r.path->monotonicity.monotone;
  } else {
    result["points"] = nullptr;
    result["indices"] = nullptr;
    result["monotone"] = nullptr;
  }
  result["path_monotone"] = monotone;
  if (space.dim() == 2) {
    Figure fig;
    fig.cloud = cloud.points();
    fig.highlight = {x, y};
    if (r.path) {
      fig.path = r.path->points;
      fig.path_monotone = monotone;
      for (std::size_t p = 0; p < r.path->monotonicity.functionals.size(); ++p) {
        fig.functionals.emplace_back(space.representative(p),
                                     verdict_name(r.path->monotonicity.functionals[p]));
      }
    }
    result["figure"] = fig.to_json();
  }

  const bool ok = r.found && monotone;
  CommandResult out{ok ? kExitOk : kExitFalsified, report_header("path", config, cfg.seed())};
  out.report["result"] = std::move(result);
  out.report["verdict"] = !r.found ? "not found" : monotone ? "monotone path found" : "path not monotone";
  return out;
}

CommandResult cmd_project(const Json& config) {
  const Config cfg(config);
  const Space space = cfg.space();
  const PointCloud cloud = cfg.cloud();
  require_cloud_dim(space, cloud);
  const Vector x = cfg.point("x", space.dim());
  const auto r = project(space, cloud, x, cfg.positive("tol", kTieTolerance));

  Json result;
  result["x"] = io::vector_to_json(x);
  result["distance"] = r.distance;
  result["nearest"] = r.nearest;
  std::vector<Vector> nearest;
  for (std::size_t i : r.nearest) nearest.push_back(cloud[i]);
  result["points"] = points_json(nearest);
  if (space.dim() == 2) {
    Figure fig;
    fig.cloud = cloud.points();
    fig.highlight = nearest;
    fig.highlight.insert(fig.highlight.begin(), x);
    result["figure"] = fig.to_json();
  }

  CommandResult out{kExitOk, report_header("project", config, cfg.seed())};
  out.report["result"] = std::move(result);
  out.report["verdict"] = "ok";
  return out;
}

CommandResult cmd_sun(const Json& config) {
  const Config cfg(config);
  const Space space = cfg.space();
  const PointCloud cloud = cfg.cloud();
  require_cloud_dim(space, cloud);
  SunParams params;
  params.lambda_max = cfg.positive("lambda_max", params.lambda_max);
  params.grid = cfg.count("grid", params.grid);
  params.tie_tol = cfg.positive("tol", params.tie_tol);
  const bool strict = cfg.flag("strict");
  const std::uint64_t seed = cfg.seed();

  std::vector<Vector> queries;
  double min_distance = 0.0;
  if (cfg.has("x")) {
    queries.push_back(cfg.point("x", space.dim()));
    if (cloud.find(queries[0])) fail(ErrorCode::kQueryInCloud, "sun: the query lies in the cloud");
  } else {
    const auto box = geometry::bounding_box(cloud.points());
    double width = 0.0;
    for (std::size_t i = 0; i < box.lo.size(); ++i) width = std::max(width, box.hi[i] - box.lo[i]);
    min_distance = net_spacing(space, cloud);
    queries = sample_queries(space, cloud, cfg.count("trials", 100), seed, std::max(1.0, width),
                             min_distance);
  }
  const auto summary = is_sun_sampled(space, cloud, queries, params, strict);

  Json result;
  result["lambda_max"] = params.lambda_max;
  result["grid"] = params.grid;
  result["strict"] = strict;
  result["min_query_distance"] = min_distance;
  Json qs = Json::array();
  for (const auto& q : summary.queries) qs.push_back(luminosity_json(q.x, q.result, cloud));
  result["queries"] = std::move(qs);
  result["falsified"] = summary.falsified;
  result["skipped"] = summary.skipped;
  result["note"] =
      "holds-on-grid means no falsifier was found on the sampled lambda grid; "
      "the condition for every lambda >= 0 is not decided by sampling";
  if (space.dim() == 2) {
    Figure fig;
    fig.cloud = cloud.points();
    for (std::size_t q : summary.falsified) fig.highlight.push_back(summary.queries[q].x);
    if (queries.size() == 1) {
      fig.highlight = {queries[0]};
      const auto& lr = summary.queries[0].result;
      if (lr.accepted) fig.highlight.push_back(cloud[lr.reports[*lr.accepted].y]);
    }
    result["figure"] = fig.to_json();
  }

  const bool ok = summary.no_falsification();
  CommandResult out{ok ? kExitOk : kExitFalsified, report_header("sun", config, seed)};
  out.report["result"] = std::move(result);
  out.report["verdict"] = ok ? "no falsification found" : "falsified";
  return out;
}

CommandResult cmd_embed(const Json& config) {
  const Config cfg(config);
  const Space space = cfg.space();
  std::optional<Embedding> e;
  if (cfg.has("indices")) {
    std::vector<std::size_t> indices;
    if (!cfg.at("indices").is_array()) bad_key("indices", "an array of pair indices");
    for (const auto& i : cfg.at("indices")) {
      if (!i.is_number_unsigned()) bad_key("indices", "an array of pair indices");
      indices.push_back(i.get<std::size_t>());
    }
    e.emplace(space, std::move(indices));
  } else {
    e.emplace(Embedding::full(space));
  }

  Json result;
  result["source"] = space.name();
  result["target"] = e->target().name();
  result["indices"] = e->indices();
  std::vector<Vector> selected;
  for (std::size_t i : e->indices()) selected.push_back(space.representative(i));
  result["functionals"] = points_json(selected);

  bool ok = true;
  if (cfg.has("x")) {
    const Vector x = cfg.point("x", space.dim());
    result["x"] = io::vector_to_json(x);
    result["image"] = io::vector_to_json(embed_point(*e, x));
    if (space.norm(x) > 0.0) {
      const auto traces = norm_convergence_check(space, cfg.count("trials", 4), x, cfg.seed());
      Json ts = Json::array();
      for (const auto& t : traces) {
        ok = ok && t.nondecreasing && t.reaches_norm;
        ts.push_back(Json{{"order", t.order},
                          {"values", t.values},
                          {"nondecreasing", t.nondecreasing},
                          {"reaches_norm", t.reaches_norm}});
      }
      result["norm"] = space.norm(x);
      result["norm_convergence"] = std::move(ts);
    }
  }
  if (cfg.has("cloud")) {
    const PointCloud cloud = cfg.cloud();
    require_cloud_dim(space, cloud);
    const auto ec = embed_cloud(*e, cloud);
    result["cloud"] = Json{{"points", points_json(ec.image.points())},
                           {"preimage", ec.preimage},
                           {"multiplicity", ec.multiplicity},
                           {"collisions", ec.collisions()}};
    if (e->target().dim() == 2) {
      Figure fig;
      fig.cloud = ec.image.points();
      result["figure"] = fig.to_json();
    }
  }

  CommandResult out{ok ? kExitOk : kExitFalsified, report_header("embed", config, cfg.seed())};
  out.report["result"] = std::move(result);
  out.report["verdict"] = ok ? "ok" : "norm convergence violated";
  return out;
}

// ---------------------------------------------------------------------------
// verify

constexpr std::size_t kVerifyRandomSpaces = 20;
constexpr std::size_t kSequenceLength = 1000;

Json verify_paths(std::uint64_t seed, bool& ok) {
  const Space linf2 = builtin_space("linf", 2);
  const Weights w = Weights::geometric(linf2.pair_count());
  constexpr double kStep = 0.05;
  Rng rng(seed);
  Json cases = Json::array();
  const auto run_nets = [&](const std::string& name, const PointCloud& net) {
    std::size_t found = 0;
    std::size_t monotone = 0;
    double worst_ratio = 0.0;
    constexpr std::size_t kPairs = 10;
    for (std::size_t t = 0; t < kPairs; ++t) {
      const std::size_t a = rng.index(net.size());
      std::size_t b = rng.index(net.size() - 1);
      if (b >= a) ++b;
      const auto r = monotone_path(linf2, w, net, net[a], net[b]);
      if (r.found) {
        ++found;
        worst_ratio = std::max(worst_ratio, r.defect() / r.target);
        if (r.path->monotonicity.monotone) ++monotone;
      }
    }
    const bool pass = found == kPairs && monotone == kPairs && worst_ratio <= 1e-6;
    ok = ok && pass;
    cases.push_back(Json{{"set", name},
                         {"points", net.size()},
                         {"pairs", kPairs},
                         {"found", found},
                         {"monotone", monotone},
                         {"max_relative_defect", worst_ratio},
                         {"pass", pass}});
  };
  run_nets("box", fixtures::box_net({0.0, 0.0}, {1.0, 1.0}, kStep));
  run_nets("staircase", fixtures::staircase_net(3, kStep));

  const PointCloud sheets = fixtures::two_sheet_net(2, 0.1);
  const std::size_t half = sheets.size() / 2;
  const std::size_t a = rng.index(half);
  const std::size_t b = half + rng.index(half);
  const auto r = monotone_path(linf2, w, sheets, sheets[a], sheets[b]);
  ok = ok && !r.found;
  cases.push_back(Json{{"set", "two sheets"},
                       {"points", sheets.size()},
                       {"from", io::vector_to_json(sheets[a])},
                       {"to", io::vector_to_json(sheets[b])},
                       {"found", r.found},
                       {"pass", !r.found}});
  return cases;
}

CommandResult cmd_verify(const Json& config) {
  const Config cfg(config);
  const std::uint64_t seed = cfg.seed();
  const std::size_t trials = cfg.count("trials", 1000);
  if (trials == 0) bad_key("trials", "a positive integer");
  const double tol = cfg.positive("tol", kBetweenTolerance);
  const auto spaces = standard_test_spaces(kVerifyRandomSpaces, seed);

  bool ok = true;
  Json sections;

  Json between = Json::array();
  std::size_t disagreements = 0;
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    const Space& s = spaces[k];
    const auto r = between_equiv_check(s, Weights::geometric(s.pair_count()), trials, seed + k, tol);
    disagreements += r.disagreements;
    between.push_back(Json{{"space", s.name()},
                           {"trials", r.trials},
                           {"disagreements", r.disagreements},
                           {"interval_hits", r.interval_hits}});
  }
  ok = ok && disagreements == 0;
  sections["betweenness_equivalence"] = Json{{"spaces", std::move(between)},
                                             {"disagreements", disagreements},
                                             {"pass", disagreements == 0}};

  Json inclusion = Json::array();
  std::size_t violations = 0;
  const std::size_t hull_pairs = std::max<std::size_t>(1, trials / 100);
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    const auto r = hull_inclusion_check(spaces[k], hull_pairs, seed + 1000 + k);
    violations += r.violations;
    inclusion.push_back(Json{{"space", spaces[k].name()},
                             {"pairs", r.trials},
                             {"points_checked", r.points_checked},
                             {"violations", r.violations}});
  }
  ok = ok && violations == 0;
  sections["hull_inclusion"] =
      Json{{"spaces", std::move(inclusion)}, {"violations", violations}, {"pass", violations == 0}};

  Json convergence = Json::array();
  std::size_t conv_disagreements = 0;
  std::size_t conv_unexpected = 0;
  const std::size_t sequences = std::max<std::size_t>(1, trials / 100);
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    const Space& s = spaces[k];
    const Weights w = Weights::geometric(s.pair_count());
    Rng rng(seed + 2000 + k);
    std::size_t dis = 0;
    std::size_t unexpected = 0;
    for (std::size_t q = 0; q < sequences; ++q) {
      const auto seq = fixtures::random_sequence(rng, s, kSequenceLength);
      for (double t : {1e-3, 1e-6}) {
        const auto r = seq_convergence_check(s, w, seq.points, seq.limit, t);
        if (!r.agree()) ++dis;
        if (r.functional_converged != seq.convergent) ++unexpected;
      }
    }
    conv_disagreements += dis;
    conv_unexpected += unexpected;
    convergence.push_back(Json{{"space", s.name()},
                               {"sequences", sequences},
                               {"disagreements", dis},
                               {"unexpected_verdicts", unexpected}});
  }
  const bool conv_ok = conv_disagreements == 0 && conv_unexpected == 0;
  ok = ok && conv_ok;
  sections["convergence_equivalence"] = Json{{"spaces", std::move(convergence)},
                                             {"tolerances", {1e-3, 1e-6}},
                                             {"length", kSequenceLength},
                                             {"disagreements", conv_disagreements},
                                             {"unexpected_verdicts", conv_unexpected},
                                             {"pass", conv_ok}};

  bool paths_ok = true;
  Json paths = verify_paths(seed + 3000, paths_ok);
  ok = ok && paths_ok;
  sections["monotone_paths"] = Json{{"cases", std::move(paths)}, {"pass", paths_ok}};

  CommandResult out{ok ? kExitOk : kExitFalsified, report_header("verify", config, seed)};
  out.report["result"] = Json{{"trials", trials}, {"spaces", spaces.size()}, {"sections", std::move(sections)}};
  out.report["verdict"] = ok ? "all invariants hold" : "disagreements found";
  return out;
}

using Handler = CommandResult (*)(const Json&);

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table{
      {"interval", cmd_interval}, {"hull", cmd_hull},     {"mconnect", cmd_mconnect},
      {"path", cmd_path},         {"project", cmd_project}, {"sun", cmd_sun},
      {"embed", cmd_embed},       {"verify", cmd_verify}};
  return table;
}

// ---------------------------------------------------------------------------
// SVG

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

class Canvas {
 public:
  Canvas(double lo_x, double lo_y, double hi_x, double hi_y) {
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    scale_ = (kSize - 2 * kMargin) / span;
    lo_x_ = lo_x - 0.5 * (span - (hi_x - lo_x));
    lo_y_ = lo_y - 0.5 * (span - (hi_y - lo_y));
  }
  std::string x(double v) const { return fmt(kMargin + (v - lo_x_) * scale_); }
  std::string y(double v) const { return fmt(kSize - kMargin - (v - lo_y_) * scale_); }
  std::string point_list(const Json& points) const {
    std::string s;
    for (const auto& p : points) {
      if (!s.empty()) s += ' ';
      s += x(p[0].get<double>()) + "," + y(p[1].get<double>());
    }
    return s;
  }
  static constexpr double kSize = 520.0;
  static constexpr double kMargin = 30.0;

 private:
  double scale_ = 1.0;
  double lo_x_ = 0.0;
  double lo_y_ = 0.0;
};

}  // namespace

std::string CommandResult::text() const { return report.dump(2) + "\n"; }

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, handler] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

CommandResult run_command(std::string_view command, const Json& config) {
  const auto& table = handlers();
  const auto it = table.find(command);
  if (it == table.end()) fail(ErrorCode::kInvalidArgument, "unknown command '" + std::string(command) + "'");
  return it->second(config);
}

std::string render_svg(const Json& report) {
  if (!report.contains("result") || !report["result"].contains("figure")) {
    fail(ErrorCode::kInvalidArgument, "svg: the report has no two-dimensional figure");
  }
  const Json& fig = report["result"]["figure"];
  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x;
  double hi_x = -lo_x;
  double hi_y = -lo_x;
  const auto extend = [&](const Json& points) {
    for (const auto& p : points) {
      lo_x = std::min(lo_x, p[0].get<double>());
      hi_x = std::max(hi_x, p[0].get<double>());
      lo_y = std::min(lo_y, p[1].get<double>());
      hi_y = std::max(hi_y, p[1].get<double>());
    }
  };
  extend(fig["cloud"]);
  extend(fig["highlight"]);
  for (const auto& poly : fig["polygons"]) extend(poly);
  if (fig.contains("path")) extend(fig["path"]["points"]);
  if (!(lo_x <= hi_x)) fail(ErrorCode::kInvalidArgument, "svg: the figure is empty");

  const Canvas c(lo_x, lo_y, hi_x, hi_y);
  std::ostringstream out;
  const std::string size = fmt(Canvas::kSize);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& poly : fig["polygons"]) {
    out << "  <polygon points=\"" << c.point_list(poly)
        << "\" fill=\"#cfe3f7\" fill-opacity=\"0.6\" stroke=\"#2f6db5\" stroke-width=\"1\"/>\n";
  }
  for (const auto& p : fig["cloud"]) {
    out << "  <circle cx=\"" << c.x(p[0].get<double>()) << "\" cy=\"" << c.y(p[1].get<double>())
        << "\" r=\"2\" fill=\"#555555\"/>\n";
  }
  if (fig.contains("path")) {
    const Json& path = fig["path"];
    const char* colour = path["monotone"].get<bool>() ? "#2a9d3a" : "#d1342f";
    out << "  <polyline points=\"" << c.point_list(path["points"]) << "\" fill=\"none\" stroke=\""
        << colour << "\" stroke-width=\"2\"/>\n";
    double ty = 16.0;
    for (const auto& f : path["functionals"]) {
      const bool mono = f["verdict"].get<std::string>() != "not monotone";
      out << "  <text x=\"8\" y=\"" << fmt(ty) << "\" font-family=\"monospace\" font-size=\"11\" fill=\""
          << (mono ? "#2a9d3a" : "#d1342f") << "\">f=(" << fmt(f["functional"][0].get<double>()) << ","
          << fmt(f["functional"][1].get<double>()) << ") " << f["verdict"].get<std::string>()
          << "</text>\n";
      ty += 13.0;
    }
  }
  for (const auto& p : fig["highlight"]) {
    out << "  <circle cx=\"" << c.x(p[0].get<double>()) << "\" cy=\"" << c.y(p[1].get<double>())
        << "\" r=\"4\" fill=\"none\" stroke=\"#d1342f\" stroke-width=\"1.5\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace sunlab
