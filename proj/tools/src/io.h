// Copyright 2026 The StripComplex Authors.
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
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "stripcomplex/polygons.h"
#include "stripcomplex/strips.h"
#include "stripcomplex/suites.h"

namespace stripcomplex::cli {

using json = nlohmann::ordered_json;

// Input that does not follow the metric or point schema. where is a JSON
// pointer, or "line L, column C" for syntax errors.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Parses text, reporting syntax errors by line and column.
json parse_text(const std::string& text);
std::string read_file(const std::string& path);

PolygonMetric metric_from_json(const json& j);
json metric_to_json(const PolygonMetric& m);

// {"arcs": [[u, v], ...], "weights": [...]}; weights default to the
// barycenter.
BarycentricPoint point_from_json(const json& j, const PolygonMetric& m);
json point_to_json(const BarycentricPoint& x);

json config_to_json(const SuiteConfig& c);
json report_to_json(const SuiteReport& r);
json stats_to_json(const ArcComplexStats& s);

// Writes to path atomically, or to stdout when path is empty.
void write_output(const std::string& path, const std::string& text);

}  // namespace stripcomplex::cli
