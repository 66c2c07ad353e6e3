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
// stripcomplex: arc complex statistics, verification sweeps and the strip
// map on a single metric. Exit codes: 0 success, 1 failed check, 2 invalid
// configuration or input, 3 resource guard exceeded.

#include <charconv>
#include <cmath>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "io.h"
#include "stripcomplex/arccomplex.h"
#include "stripcomplex/error.h"
#include "stripcomplex/suites.h"

namespace sc = stripcomplex;
using sc::cli::json;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitGuard = 3;

struct Options {
  std::string kind = "ideal";
  std::string n = "5";
  long samples = 100;
  long first_sample = 0;
  std::uint64_t seed = 1;
  std::string mode = "intrinsic";
  int kmax = sc::kDefaultKmax;
  double tol = -1;
  std::string out;
  std::string format = "json";
  int threads = 0;
  std::string suite;
  std::string metric_file;
  std::string point;
  std::string csv;
  bool pruned = false;
};

const char* kGenerator =
    "free vertices sorted uniform in (1, 5) with gap 0.05 (punctured kinds: "
    "(0, 1) with gap 1/(8n)); decoration diameters f times the distance to "
    "the nearest other vertex or lift, f log-uniform in [0.05, 0.9]; height "
    "at infinity max(h)/f0; rejection on validity; per-sample mt19937_64 "
    "seeded by splitmix64(master, index)";

int exit_code_for(const sc::Error& e) {
  return e.code() == sc::ErrorCode::kResourceGuard ? kExitGuard : kExitInvalid;
}

// "5" or "4..8".
std::vector<int> parse_range(const std::string& text) {
  auto to_int = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw sc::Error(sc::ErrorCode::kInvalidInput, "bad --n '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {to_int(text)};
  const int lo = to_int(std::string_view(text).substr(0, dots));
  const int hi = to_int(std::string_view(text).substr(dots + 2));
  if (hi < lo) throw sc::Error(sc::ErrorCode::kInvalidInput, "empty --n range");
  std::vector<int> r;
  for (int v = lo; v <= hi; ++v) r.push_back(v);
  return r;
}

json header(const std::string& command) {
  return {{"schema_version", sc::kReportSchemaVersion},
          {"library_version", sc::library_version()},
          {"command", command}};
}

std::string csv_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  if (v == 0) v = 0;  // drop the sign of -0
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

void check_format(const Options& o) {
  if (o.format != "json" && o.format != "csv")
    throw sc::Error(sc::ErrorCode::kInvalidInput, "--format must be json or csv");
}

int run_arc_complex(const Options& o) {
  check_format(o);
  const sc::Kind kind = sc::parse_kind(o.kind);
  json rep = header("arc-complex");
  rep["runs"] = json::array();
  std::ostringstream csv;
  csv << "kind,n,k,simplices,expected_link_euler,link_violations,corner_violations\n";
  bool ok = true;
  for (int n : parse_range(o.n)) {
    const sc::ArcComplexStats st = sc::arc_complex_stats(kind, n);
    rep["runs"].push_back(sc::cli::stats_to_json(st));
    for (const sc::LinkRow& r : st.links) {
      ok = ok && r.link_violations == 0 && r.corner_violations == 0;
      csv << o.kind << ',' << n << ',' << r.k << ',' << r.simplices << ','
          << r.expected_euler << ',' << r.link_violations << ','
          << r.corner_violations << '\n';
    }
    if (st.has_sphere_euler) ok = ok && st.euler == st.sphere_euler && st.pseudo_manifold;
  }
  rep["pass"] = ok;
  sc::cli::write_output(o.out, o.format == "csv" ? csv.str() : rep.dump(2) + "\n");
  return ok ? 0 : kExitFailed;
}

int run_verify(const Options& o) {
  check_format(o);
  sc::SuiteConfig cfg;
  cfg.kind = sc::parse_kind(o.kind);
  cfg.samples = o.samples;
  cfg.first_sample = o.first_sample;
  cfg.seed = o.seed;
  cfg.mode = sc::parse_waist_mode(o.mode);
  cfg.kmax = o.kmax;
  cfg.tol = o.tol;
  cfg.threads = o.threads;
  sc::check_suite(o.suite, cfg.kind);
  const std::vector<int> ns = parse_range(o.n);
  for (int n : ns)
    if (n < sc::min_vertices(cfg.kind))
      throw sc::Error(sc::ErrorCode::kInvalidInput, "n below the minimum for the kind");

  json rep = header("verify");
  rep["suite"] = o.suite;
  rep["generator"] = kGenerator;
  rep["runs"] = json::array();
  std::ostringstream csv;
  csv << "suite,kind,n,check,bound,threshold,worst,count,failures,pass\n";
  bool ok = true;
  for (int n : ns) {
    cfg.n = n;
    const sc::SuiteReport r = sc::run_suite(o.suite, cfg);
    ok = ok && r.pass();
    rep["runs"].push_back(sc::cli::report_to_json(r));
    for (const sc::CheckResult& c : r.checks)
      csv << o.suite << ',' << o.kind << ',' << n << ',' << c.name << ','
          << sc::bound_name(c.bound) << ',' << csv_number(c.threshold) << ','
          << (c.count ? csv_number(c.worst) : "") << ',' << c.count << ','
          << c.failures << ',' << (c.pass() ? "true" : "false") << '\n';
  }
  rep["pass"] = ok;
  sc::cli::write_output(o.out, o.format == "csv" ? csv.str() : rep.dump(2) + "\n");
  return ok ? 0 : kExitFailed;
}

// Plot data of the realized arc system: boundary edges, realized segments,
// waists and horocycles (as the diameter from the base to the top).
std::string plot_csv(const sc::PolygonMetric& m, const sc::BarycentricPoint& x,
                     const sc::StripTemplate& t) {
  std::ostringstream csv;
  csv << "object-id,type,x0,y0,x1,y1\n";
  int id = 0;
  auto row = [&](const char* type, double x0, double y0, double x1, double y1) {
    csv << id++ << ',' << type << ',' << csv_number(x0) << ',' << csv_number(y0)
        << ',' << csv_number(x1) << ',' << csv_number(y1) << '\n';
  };
  auto point_of = [](const sc::MinVector& v, double& px, double& py) {
    if (sc::classify(v) == sc::CausalClass::kTimelike) {
      const sc::UhpPoint z = sc::to_uhp(v);
      px = z.re;
      py = z.im;
    } else {
      px = sc::boundary_point(v);
      py = 0;
    }
  };
  for (int i = 0; i < m.n; ++i) row("edge", m.lift(i), 0, m.lift(i + 1), 0);
  for (const sc::ArcClass& a : x.arcs) {
    const sc::RealizedArc r = sc::realize_arc(m, a, t);
    double x0, y0, x1, y1;
    point_of(r.ends[0], x0, y0);
    point_of(r.ends[1], x1, y1);
    row(r.type == sc::StripType::kParabolic ? "parabolic-arc" : "hyperbolic-arc",
        x0, y0, x1, y1);
    point_of(r.waist, x0, y0);
    row("waist", x0, y0, x0, y0);
  }
  for (int i = 0; i < static_cast<int>(m.sizes.size()); ++i) {
    const sc::UhpHoroball h = m.uhp_horoball(i);
    row("horocycle", h.base, 0, h.base, h.size);
  }
  return csv.str();
}

int run_strip_map(const Options& o) {
  check_format(o);
  if (o.metric_file.empty())
    throw sc::cli::SchemaError("--metric", "a metric file is required");
  if (o.point.empty()) throw sc::cli::SchemaError("--point", "a point is required");
  const sc::PolygonMetric m =
      sc::cli::metric_from_json(sc::cli::parse_text(sc::cli::read_file(o.metric_file)));
  // The point is inline JSON or a file holding it.
  const std::string point_text =
      o.point.find('{') != std::string::npos ? o.point : sc::cli::read_file(o.point);
  const sc::BarycentricPoint x = sc::cli::point_from_json(sc::cli::parse_text(point_text), m);
  sc::StripTemplate t;
  t.mode = sc::parse_waist_mode(o.mode);
  if (o.kmax < 0) throw sc::Error(sc::ErrorCode::kInvalidInput, "kmax must be >= 0");

  const sc::TangentVector v = sc::strip_map(m, x, t, o.pruned);
  const int kk = sc::is_punctured(m.kind) ? o.kmax : 0;
  json rep = header("strip-map");
  rep["config"] = {{"metric", sc::cli::metric_to_json(m)},
                   {"point", sc::cli::point_to_json(x)},
                   {"template", sc::waist_mode_name(t.mode)},
                   {"kmax", o.kmax},
                   {"pruned", o.pruned}};
  rep["tangent"] = v.d;
  rep["coordinates"] = m.coordinates();
  json dl = json::array();
  for (const sc::Connection& c : sc::connections(m.kind, m.n, kk))
    dl.push_back({{"i", c.i}, {"j", c.j}, {"k", c.k},
                  {"dl", sc::length_derivative(m, v, c)}});
  rep["length_derivatives"] = dl;
  rep["admissible"] = sc::admissible(m, v, o.kmax);
  json notes = json::array();
  if (!sc::is_decorated(m.kind))
    notes.push_back("length derivatives use unit auxiliary horoballs");
  if (sc::is_punctured(m.kind))
    notes.push_back("connections truncated at |winding| <= " + std::to_string(o.kmax));
  rep["notes"] = notes;

  const std::string plot = o.csv.empty() && o.format != "csv" ? "" : plot_csv(m, x, t);
  if (!o.csv.empty()) sc::cli::write_output(o.csv, plot);
  sc::cli::write_output(o.out, o.format == "csv" ? plot : rep.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strip deformations of hyperbolic polygons"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--kind", o.kind, "ideal, punctured, decorated, decorated-punctured");
    c->add_option("--n", o.n, "number of vertices, or a range lo..hi");
    c->add_option("--out", o.out, "output path (default stdout)");
    c->add_option("--format", o.format, "json or csv");
    c->add_option("--template", o.mode, "intrinsic or foot-of-infinity");
    c->add_option("--kmax", o.kmax, "winding cutoff for punctured kinds");
  };
  CLI::App* ac = app.add_subcommand("arc-complex", "arc complex statistics");
  common(ac);
  CLI::App* ver = app.add_subcommand("verify", "randomized verification suite");
  common(ver);
  ver->add_option("suite", o.suite, "basis, codim1, codim2, length-derivative, "
                                    "admissible, proper, cusp, lemmas")
      ->required();
  ver->add_option("--samples", o.samples, "number of random samples");
  ver->add_option("--first-sample", o.first_sample, "index of the first sample");
  ver->add_option("--seed", o.seed, "master seed");
  ver->add_option("--tol", o.tol, "bound of the main check");
  ver->add_option("--threads", o.threads, "worker threads (capped by STRIPCOMPLEX_THREADS)");
  CLI::App* sm = app.add_subcommand("strip-map", "strip map of one point");
  common(sm);
  sm->add_option("--metric", o.metric_file, "metric JSON file")->required();
  sm->add_option("--point", o.point, "point JSON, inline or a file")->required();
  sm->add_option("--csv", o.csv, "plot data of the realized arcs");
  sm->add_flag("--pruned", o.pruned, "require a filling support");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*ac) return run_arc_complex(o);
    if (*ver) return run_verify(o);
    return run_strip_map(o);
  } catch (const sc::cli::SchemaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const sc::Error& e) {
    std::cerr << "error (" << sc::error_code_name(e.code()) << "): " << e.what() << '\n';
    if (e.code() == sc::ErrorCode::kDegenerate || e.code() == sc::ErrorCode::kRankDeficient)
      return kExitFailed;
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}
