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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stripcomplex/arccomplex.h"
#include "stripcomplex/strips.h"

namespace stripcomplex {

constexpr int kReportSchemaVersion = 1;
const char* library_version();

struct SuiteConfig {
  Kind kind = Kind::kIdeal;
  int n = 5;
  long samples = 100;
  // Samples are numbered from first_sample; a failure can be replayed by
  // rerunning its index alone.
  long first_sample = 0;
  std::uint64_t seed = 1;
  WaistMode mode = WaistMode::kIntrinsic;
  int kmax = kDefaultKmax;
  // Overrides the bound of the suite's main check when >= 0.
  double tol = -1;
  // 0 means STRIPCOMPLEX_THREADS, or the hardware concurrency if unset.
  int threads = 0;
};

enum class Bound { kAtMost, kAtLeast, kAbove };
const char* bound_name(Bound b);

struct FailureRecord {
  long sample = -1;
  std::uint64_t seed = 0;
  std::vector<double> coordinates;
  std::string detail;
  double value = 0;
};

struct CheckResult {
  std::string name;
  Bound bound = Bound::kAtMost;
  double threshold = 0;
  // Worst observed value, in the direction of the bound.
  double worst = 0;
  long count = 0;
  long failures = 0;
  std::vector<FailureRecord> examples;
  bool pass() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CheckResult> checks;
  // Informational counters, e.g. link cycle lengths.
  std::map<std::string, long> tallies;
  std::vector<std::string> notes;
  double seconds = 0;
  bool pass() const;
  const CheckResult* find(std::string_view name) const;
};

const std::vector<std::string>& suite_names();
// Throws kInvalidInput for unknown suites and kUnsupported when the suite
// does not apply to the kind.
void check_suite(std::string_view suite, Kind kind);
SuiteReport run_suite(std::string_view suite, const SuiteConfig& config);

int resolve_threads(int requested);

struct LinkRow {
  int k = 0;  // simplex dimension
  long long simplices = 0;
  long long expected_euler = 0;
  long long link_violations = 0;
  long long corner_violations = 0;
};

struct ArcComplexStats {
  Kind kind = Kind::kIdeal;
  int n = 0;
  long long arcs = 0;
  std::vector<long long> f_vector;
  long long euler = 0;
  long long tops = 0;
  long long filling_tops = 0;
  int dimension = 0;
  bool pure = false;
  // Only meaningful for undecorated kinds, whose complexes are spheres.
  bool pseudo_manifold = false;
  bool has_sphere_euler = false;
  long long sphere_euler = 0;
  // Simplices of the pruned complex by dimension: the filling ones for
  // decorated kinds, all of them otherwise. Corner counts are checked on
  // filling simplices.
  std::vector<LinkRow> links;
  double seconds = 0;
};

ArcComplexStats arc_complex_stats(Kind kind, int n);

}  // namespace stripcomplex
