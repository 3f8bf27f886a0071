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


#include "sunlab/sunlab.h"

#include <cstring>
#include <new>
#include <string>

#include "sunlab/commands.hpp"
#include "sunlab/embed.hpp"
#include "sunlab/hull.hpp"
#include "sunlab/io.hpp"
#include "sunlab/metric.hpp"
#include "sunlab/approx.hpp"

struct sunlab_space {
  sunlab::Space value;
};
struct sunlab_weights {
  sunlab::Weights value;
};
struct sunlab_cloud {
  sunlab::PointCloud value;
};

namespace {

thread_local std::string last_error;

template <typename F>
sunlab_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return SUNLAB_OK;
  } catch (const sunlab::Error& e) {
    last_error = e.what();
    return static_cast<sunlab_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SUNLAB_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SUNLAB_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) sunlab::fail(sunlab::ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

sunlab::VecView view(const double* p, std::size_t n) { return {p, n}; }

std::vector<sunlab::Vector> rows(const double* data, std::size_t count, std::size_t dim) {
  if (count > 0) need(data, "data");
  std::vector<sunlab::Vector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(data + i * dim, data + (i + 1) * dim);
  return out;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* sunlab_version(void) { return "0.1.0"; }

const char* sunlab_status_name(sunlab_status status) {
  if (status == SUNLAB_OK) return "OK";
  return sunlab::error_code_name(static_cast<sunlab::ErrorCode>(status)).data();
}

const char* sunlab_last_error(void) { return last_error.c_str(); }

void sunlab_string_free(char* s) { std::free(s); }

sunlab_status sunlab_space_create(const double* functionals, size_t count, size_t dim,
                                  sunlab_space** out) {
  return guard([&] {
    need(out, "out");
    if (dim == 0) sunlab::fail(sunlab::ErrorCode::kInvalidArgument, "dim must be positive");
    *out = new sunlab_space{sunlab::make_space(rows(functionals, count, dim))};
  });
}

sunlab_status sunlab_space_builtin(const char* family, size_t n, sunlab_space** out) {
  return guard([&] {
    need(family, "family");
    need(out, "out");
    *out = new sunlab_space{sunlab::builtin_space(family, n)};
  });
}

sunlab_status sunlab_space_from_json(const char* json, sunlab_space** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    *out = new sunlab_space{sunlab::io::space_from_spec(sunlab::io::parse_json(json, "space"))};
  });
}

sunlab_status sunlab_space_to_json(const sunlab_space* space, char** json) {
  return guard([&] {
    need(space, "space");
    need(json, "json");
    *json = copy_string(sunlab::io::space_to_json(space->value).dump());
  });
}

void sunlab_space_free(sunlab_space* space) { delete space; }

size_t sunlab_space_dim(const sunlab_space* space) { return space ? space->value.dim() : 0; }

size_t sunlab_space_pair_count(const sunlab_space* space) {
  return space ? space->value.pair_count() : 0;
}

sunlab_status sunlab_space_norm(const sunlab_space* space, const double* x, double* out) {
  return guard([&] {
    need(space, "space");
    need(x, "x");
    need(out, "out");
    *out = space->value.norm(view(x, space->value.dim()));
  });
}

sunlab_status sunlab_weights_create(const double* alphas, size_t count, sunlab_weights** out) {
  return guard([&] {
    need(out, "out");
    if (count > 0) need(alphas, "alphas");
    *out = new sunlab_weights{sunlab::Weights(std::vector<double>(alphas, alphas + count))};
  });
}

sunlab_status sunlab_weights_scheme(const char* scheme, size_t count, sunlab_weights** out) {
  return guard([&] {
    need(scheme, "scheme");
    need(out, "out");
    *out = new sunlab_weights{sunlab::Weights::scheme(scheme, count)};
  });
}

void sunlab_weights_free(sunlab_weights* weights) { delete weights; }

sunlab_status sunlab_cloud_create(const double* points, size_t count, size_t dim,
                                  sunlab_cloud** out) {
  return guard([&] {
    need(out, "out");
    if (dim == 0 && count > 0) sunlab::fail(sunlab::ErrorCode::kInvalidArgument, "dim must be positive");
    *out = new sunlab_cloud{sunlab::PointCloud(rows(points, count, dim))};
  });
}

sunlab_status sunlab_cloud_from_json(const char* json, sunlab_cloud** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    *out = new sunlab_cloud{sunlab::io::cloud_from_json(sunlab::io::parse_json(json, "cloud"))};
  });
}

sunlab_status sunlab_cloud_from_csv(const char* csv, sunlab_cloud** out) {
  return guard([&] {
    need(csv, "csv");
    need(out, "out");
    *out = new sunlab_cloud{sunlab::io::cloud_from_csv(csv)};
  });
}

size_t sunlab_cloud_size(const sunlab_cloud* cloud) { return cloud ? cloud->value.size() : 0; }

void sunlab_cloud_free(sunlab_cloud* cloud) { delete cloud; }

sunlab_status sunlab_interval_contains(const sunlab_space* space, const double* x,
                                       const double* y, const double* z, int* out) {
  return guard([&] {
    need(space, "space");
    need(x, "x");
    need(y, "y");
    need(z, "z");
    need(out, "out");
    const std::size_t n = space->value.dim();
    *out = sunlab::interval(space->value, view(x, n), view(y, n)).contains(view(z, n)) ? 1 : 0;
  });
}

sunlab_status sunlab_associated_norm(const sunlab_space* space, const sunlab_weights* weights,
                                     const double* x, double* out) {
  return guard([&] {
    need(space, "space");
    need(weights, "weights");
    need(x, "x");
    need(out, "out");
    *out = sunlab::associated_norm(space->value, weights->value, view(x, space->value.dim()));
  });
}

sunlab_status sunlab_is_between(const sunlab_space* space, const sunlab_weights* weights,
                                const double* x, const double* z, const double* y, double tol,
                                int* out) {
  return guard([&] {
    need(space, "space");
    need(weights, "weights");
    need(x, "x");
    need(z, "z");
    need(y, "y");
    need(out, "out");
    const std::size_t n = space->value.dim();
    *out = sunlab::is_between(space->value, weights->value, view(x, n), view(z, n), view(y, n), tol)
               ? 1
               : 0;
  });
}

sunlab_status sunlab_project(const sunlab_space* space, const sunlab_cloud* cloud,
                             const double* x, double* distance, size_t* nearest, size_t capacity,
                             size_t* count) {
  return guard([&] {
    need(space, "space");
    need(cloud, "cloud");
    need(x, "x");
    need(distance, "distance");
    need(count, "count");
    if (capacity > 0) need(nearest, "nearest");
    const auto r = sunlab::project(space->value, cloud->value, view(x, space->value.dim()));
    *distance = r.distance;
    *count = r.nearest.size();
    for (std::size_t i = 0; i < r.nearest.size() && i < capacity; ++i) nearest[i] = r.nearest[i];
  });
}

sunlab_status sunlab_m_connected(const sunlab_space* space, const sunlab_cloud* cloud,
                                 double scale, int* connected, size_t witness[2]) {
  return guard([&] {
    need(space, "space");
    need(cloud, "cloud");
    need(connected, "connected");
    sunlab::MConnectOptions opts;
    if (scale >= 0.0) opts.scale = scale;
    const auto r = sunlab::m_connected(space->value, cloud->value, opts);
    *connected = r.connected ? 1 : 0;
    if (witness != nullptr && r.witness) {
      witness[0] = r.witness->first;
      witness[1] = r.witness->second;
    }
  });
}

sunlab_status sunlab_embed_point(const sunlab_space* space, const size_t* indices, size_t count,
                                 const double* x, double* out) {
  return guard([&] {
    need(space, "space");
    need(x, "x");
    need(out, "out");
    if (count > 0) need(indices, "indices");
    const sunlab::Embedding e(space->value, std::vector<std::size_t>(indices, indices + count));
    const auto image = sunlab::embed_point(e, view(x, space->value.dim()));
    std::copy(image.begin(), image.end(), out);
  });
}

sunlab_status sunlab_run(const char* command, const char* config_json, char** report,
                         int* exit_code) {
  return guard([&] {
    need(command, "command");
    need(report, "report");
    need(exit_code, "exit_code");
    const auto config = config_json ? sunlab::io::parse_json(config_json, "config")
                                    : sunlab::io::Json::object();
    const auto result = sunlab::run_command(command, config);
    *report = copy_string(result.text());
    *exit_code = result.exit_code;
  });
}

sunlab_status sunlab_render_svg(const char* report_json, char** svg) {
  return guard([&] {
    need(report_json, "report_json");
    need(svg, "svg");
    *svg = copy_string(sunlab::render_svg(sunlab::io::parse_json(report_json, "report")));
  });
}

}  // extern "C"
