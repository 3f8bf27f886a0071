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

#include "sunlab/io.hpp"

#include <charconv>
#include <cstdlib>

namespace sunlab::io {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void schema_error(std::string_view what, std::string_view detail) {
  fail(ErrorCode::kParseError, std::string(what) + ": " + std::string(detail));
}

}  // namespace

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    fail(ErrorCode::kParseError, std::string(source) + ":" + std::to_string(line) + ":" +
                                     std::to_string(col) + ": invalid JSON");
  }
}

Vector vector_from_json(const Json& j, std::string_view what) {
  if (!j.is_array()) schema_error(what, "expected an array of numbers");
  Vector v;
  v.reserve(j.size());
  for (const auto& c : j) {
    if (!c.is_number()) schema_error(what, "expected an array of numbers");
    v.push_back(c.get<double>());
  }
  return v;
}

Json vector_to_json(VecView v) {
  Json j = Json::array();
  for (double c : v) j.push_back(c);
  return j;
}

Space space_from_json(const Json& j) {
  if (!j.is_object()) schema_error("space", "expected an object");
  if (!j.contains("functionals")) schema_error("space", "missing \"functionals\"");
  const auto& fs = j.at("functionals");
  if (!fs.is_array() || fs.empty()) schema_error("space", "\"functionals\" must be a nonempty array");
  std::vector<Vector> functionals;
  for (const auto& f : fs) functionals.push_back(vector_from_json(f, "space functional"));
  if (j.contains("dim")) {
    if (!j.at("dim").is_number_unsigned()) schema_error("space", "\"dim\" must be a positive integer");
    const auto dim = j.at("dim").get<std::size_t>();
    for (const auto& f : functionals) {
      if (f.size() != dim) {
        fail(ErrorCode::kDimensionMismatch, "space: functional of dimension " +
                                                std::to_string(f.size()) + " but \"dim\" is " +
                                                std::to_string(dim));
      }
    }
  }
  std::string name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) schema_error("space", "\"name\" must be a string");
    name = j.at("name").get<std::string>();
  }
  return make_space(std::move(functionals), std::move(name));
}

Json space_to_json(const Space& space) {
  Json j;
  j["dim"] = space.dim();
  Json fs = Json::array();
  for (const auto& f : space.functionals()) fs.push_back(vector_to_json(f));
  j["functionals"] = std::move(fs);
  j["name"] = space.name();
  return j;
}

Space space_from_spec(const Json& j) {
  if (j.is_string()) return builtin_from_string(j.get<std::string>());
  return space_from_json(j);
}

Weights weights_from_json(const Json& j, const Space& space) {
  if (!j.is_object()) schema_error("weights", "expected an object");
  if (j.contains("alphas")) {
    Weights w(vector_from_json(j.at("alphas"), "weights alphas"));
    if (w.size() != space.pair_count()) {
      fail(ErrorCode::kWeightMismatch, "weights: " + std::to_string(w.size()) + " alphas for " +
                                           std::to_string(space.pair_count()) +
                                           " functional pairs");
    }
    return w;
  }
  if (j.contains("scheme")) {
    if (!j.at("scheme").is_string()) schema_error("weights", "\"scheme\" must be a string");
    return Weights::scheme(j.at("scheme").get<std::string>(), space.pair_count());
  }
  schema_error("weights", "expected \"alphas\" or \"scheme\"");
}

Json weights_to_json(const Weights& w) {
  Json j;
  j["alphas"] = vector_to_json(w.alphas());
  return j;
}

PointCloud cloud_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points")) schema_error("cloud", "expected {\"points\": [...]}");
  const auto& ps = j.at("points");
  if (!ps.is_array()) schema_error("cloud", "\"points\" must be an array");
  std::vector<Vector> points;
  for (const auto& p : ps) points.push_back(vector_from_json(p, "cloud point"));
  return PointCloud(std::move(points));
}

PointCloud cloud_from_csv(std::string_view text) {
  std::vector<Vector> points;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view row = text.substr(pos, end - pos);
    ++line;
    pos = end + 1;
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    const auto first = row.find_first_not_of(" \t");
    if (first == std::string_view::npos || row[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    Vector p;
    std::size_t col = 0;
    while (col <= row.size()) {
      const std::size_t comma = std::min(row.find(',', col), row.size());
      std::string_view cell = row.substr(col, comma - col);
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      const std::size_t cell_col = col + (b == std::string_view::npos ? 0 : b) + 1;
      cell = b == std::string_view::npos ? std::string_view{} : cell.substr(b, e - b + 1);
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        fail(ErrorCode::kParseError, "csv:" + std::to_string(line) + ":" +
                                         std::to_string(cell_col) + ": expected a number");
      }
      p.push_back(value);
      col = comma + 1;
    }
    if (!points.empty() && p.size() != points[0].size()) {
      fail(ErrorCode::kParseError, "csv:" + std::to_string(line) + ":1: expected " +
                                       std::to_string(points[0].size()) + " columns, found " +
                                       std::to_string(p.size()));
    }
    points.push_back(std::move(p));
    if (end == text.size()) break;
  }
  return PointCloud(std::move(points));
}

Json cloud_to_json(const PointCloud& cloud) {
  Json ps = Json::array();
  for (const auto& p : cloud.points()) ps.push_back(vector_to_json(p));
  Json j;
  j["points"] = std::move(ps);
  return j;
}

Embedding embedding_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("source") || !j.contains("indices")) {
    schema_error("embedding", "expected {\"source\": ..., \"indices\": [...]}");
  }
  Space source = space_from_spec(j.at("source"));
  std::vector<std::size_t> indices;
  for (const auto& i : j.at("indices")) {
    if (!i.is_number_unsigned()) schema_error("embedding", "indices must be nonnegative integers");
    indices.push_back(i.get<std::size_t>());
  }
  return Embedding(std::move(source), std::move(indices));
}

Json embedding_to_json(const Embedding& e) {
  Json j;
  j["source"] = space_to_json(e.source());
  j["indices"] = e.indices();
  return j;
}

}  // namespace sunlab::io
