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
#include "io.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stripcomplex/arccomplex.h"
#include "stripcomplex/error.h"

namespace stripcomplex::cli {

namespace {

std::string pointer(const std::string& base, size_t i) {
  return base + "/" + std::to_string(i);
}

// null and "inf" encode infinity.
double boundary_value(const json& j, const std::string& where) {
  if (j.is_null()) return kInfinity;
  if (j.is_string() && j.get<std::string>() == "inf") return kInfinity;
  if (j.is_number()) return j.get<double>();
  throw SchemaError(where, "expected a number, null or \"inf\"");
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + "/" + key, "missing field");
  return *it;
}

json boundary_json(double x) { return is_infinite(x) ? json("inf") : json(x); }

}  // namespace

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SchemaError("line " + std::to_string(line) + ", column " +
                          std::to_string(col),
                      "malformed JSON");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path, "cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PolygonMetric metric_from_json(const json& j) {
  const json& jk = field(j, "kind", "");
  if (!jk.is_string()) throw SchemaError("/kind", "expected a string");
  Kind kind;
  try {
    kind = parse_kind(jk.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError("/kind", e.what());
  }
  const json& jn = field(j, "n", "");
  if (!jn.is_number_integer()) throw SchemaError("/n", "expected an integer");
  const int n = jn.get<int>();
  if (n < min_vertices(kind)) throw SchemaError("/n", "too few vertices");
  const json& jv = field(j, "vertices", "");
  if (!jv.is_array() || static_cast<int>(jv.size()) != n)
    throw SchemaError("/vertices", "expected an array of n entries");
  std::vector<double> x;
  for (size_t i = 0; i < jv.size(); ++i)
    x.push_back(boundary_value(jv[i], pointer("/vertices", i)));

  std::vector<double> sizes;
  auto jd = j.find("decorations");
  if (is_decorated(kind)) {
    if (jd == j.end()) throw SchemaError("/decorations", "missing field");
    if (!jd->is_array() || static_cast<int>(jd->size()) != n)
      throw SchemaError("/decorations", "expected an array of n entries");
    for (size_t i = 0; i < jd->size(); ++i) {
      const std::string where = pointer("/decorations", i);
      const double base = boundary_value(field((*jd)[i], "base", where), where + "/base");
      if (!(base == x[i] ||
            std::abs(base - x[i]) <= 1e-12 * std::max(1.0, std::abs(x[i]))))
        throw SchemaError(where + "/base", "does not match vertex " + std::to_string(i));
      const json& js = field((*jd)[i], "size", where);
      if (!js.is_number()) throw SchemaError(where + "/size", "expected a number");
      sizes.push_back(js.get<double>());
    }
  } else if (jd != j.end() && !jd->is_null()) {
    throw SchemaError("/decorations", "undecorated kinds take no decorations");
  }

  const int pinned = n - free_vertex_count(kind, n);
  const std::vector<double> expect =
      is_punctured(kind) ? std::vector<double>{0} : std::vector<double>{kInfinity, 0, 1};
  for (int i = 0; i < pinned; ++i)
    if (x[i] != expect[i])
      throw SchemaError(pointer("/vertices", i),
                        is_punctured(kind) ? "punctured kinds pin vertex 0 at 0"
                                           : "vertices 0, 1, 2 are pinned at inf, 0, 1");
  try {
    return make_metric(kind, n, {x.begin() + pinned, x.end()}, sizes);
  } catch (const Error& e) {
    const bool sizes_wrong = e.code() == ErrorCode::kDecorationOverlap ||
                             e.code() == ErrorCode::kInvalidInput;
    throw SchemaError(sizes_wrong && !sizes.empty() ? "/decorations" : "/vertices",
                      e.what());
  }
}

json metric_to_json(const PolygonMetric& m) {
  json j;
  j["kind"] = kind_name(m.kind);
  j["n"] = m.n;
  j["vertices"] = json::array();
  for (double x : m.x) j["vertices"].push_back(is_infinite(x) ? json(nullptr) : json(x));
  if (!m.sizes.empty()) {
    j["decorations"] = json::array();
    for (int i = 0; i < m.n; ++i)
      j["decorations"].push_back({{"base", boundary_json(m.x[i])}, {"size", m.sizes[i]}});
  }
  return j;
}

BarycentricPoint point_from_json(const json& j, const PolygonMetric& m) {
  const json& ja = field(j, "arcs", "");
  if (!ja.is_array() || ja.empty())
    throw SchemaError("/arcs", "expected a nonempty array");
  const auto permitted = enumerate_arcs(m.kind, m.n);
  BarycentricPoint x;
  for (size_t i = 0; i < ja.size(); ++i) {
    const std::string where = pointer("/arcs", i);
    if (!ja[i].is_array() || ja[i].size() != 2 || !ja[i][0].is_number_integer() ||
        !ja[i][1].is_number_integer())
      throw SchemaError(where, "expected a pair of integers [u, v]");
    const ArcClass a{ja[i][0].get<int>(), ja[i][1].get<int>()};
    if (std::find(permitted.begin(), permitted.end(), a) == permitted.end())
      throw SchemaError(where, "not a permitted arc of this kind");
    x.arcs.push_back(a);
  }
  auto jw = j.find("weights");
  if (jw == j.end() || jw->is_null()) {
    x.weights = barycenter(x.arcs).weights;
    return x;
  }
  if (!jw->is_array() || jw->size() != ja.size())
    throw SchemaError("/weights", "expected one weight per arc");
  double sum = 0;
  for (size_t i = 0; i < jw->size(); ++i) {
    if (!(*jw)[i].is_number() || !((*jw)[i].get<double>() > 0))
      throw SchemaError(pointer("/weights", i), "expected a positive number");
    x.weights.push_back((*jw)[i].get<double>());
    sum += x.weights.back();
  }
  if (std::abs(sum - 1) > 1e-9) throw SchemaError("/weights", "weights must sum to 1");
  return x;
}

json point_to_json(const BarycentricPoint& x) {
  json j;
  j["arcs"] = json::array();
  for (const ArcClass& a : x.arcs) j["arcs"].push_back({a.u, a.v});
  j["weights"] = x.weights;
  return j;
}

json config_to_json(const SuiteConfig& c) {
  return {{"kind", kind_name(c.kind)},
          {"n", c.n},
          {"samples", c.samples},
          {"first_sample", c.first_sample},
          {"seed", c.seed},
          {"template", waist_mode_name(c.mode)},
          {"kmax", c.kmax},
          {"tol", c.tol >= 0 ? json(c.tol) : json(nullptr)}};
}

json report_to_json(const SuiteReport& r) {
  json j;
  j["suite"] = r.suite;
  j["config"] = config_to_json(r.config);
  j["pass"] = r.pass();
  j["checks"] = json::array();
  for (const CheckResult& c : r.checks) {
    json jc = {{"name", c.name},
               {"bound", bound_name(c.bound)},
               {"threshold", c.threshold},
               {"worst", c.count ? json(c.worst) : json(nullptr)},
               {"count", c.count},
               {"failures", c.failures},
               {"pass", c.pass()}};
    jc["examples"] = json::array();
    for (const FailureRecord& f : c.examples)
      jc["examples"].push_back({{"sample", f.sample},
                                {"seed", f.seed},
                                {"coordinates", f.coordinates},
                                {"detail", f.detail},
                                {"value", f.value}});
    j["checks"].push_back(jc);
  }
  j["tallies"] = r.tallies;
  j["notes"] = r.notes;
  j["timing"] = {{"seconds", r.seconds}};
  return j;
}

json stats_to_json(const ArcComplexStats& s) {
  json j;
  j["kind"] = kind_name(s.kind);
  j["n"] = s.n;
  j["arcs"] = s.arcs;
  j["arc_classes"] = json::array();
  for (const ArcClass& a : enumerate_arcs(s.kind, s.n)) j["arc_classes"].push_back({a.u, a.v});
  j["f_vector"] = s.f_vector;
  j["euler_characteristic"] = s.euler;
  j["top_simplices"] = s.tops;
  j["filling_top_simplices"] = s.filling_tops;
  j["dimension"] = s.dimension;
  j["pure"] = s.pure;
  if (s.has_sphere_euler) {
    j["pseudo_manifold"] = s.pseudo_manifold;
    j["sphere_euler"] = s.sphere_euler;
  }
  j["links"] = json::array();
  for (const LinkRow& row : s.links)
    j["links"].push_back({{"k", row.k},
                                  {"simplices", row.simplices},
                                  {"expected_link_euler", row.expected_euler},
                                  {"link_violations", row.link_violations},
                                  {"corner_violations", row.corner_violations}});
  j["timing"] = {{"seconds", s.seconds}};
  return j;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw SchemaError(path, "cannot write file");
    out << text;
    if (!out) throw SchemaError(path, "write failed");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace stripcomplex::cli
