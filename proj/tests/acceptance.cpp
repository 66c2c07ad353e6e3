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
// Acceptance run: one line per criterion, exit status 0 when all pass.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "stripcomplex/error.h"
#include "stripcomplex/suites.h"

using namespace stripcomplex;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Run {
  Kind kind;
  int n;
  long samples;
  WaistMode mode = WaistMode::kIntrinsic;
};

long long catalan(int k) {
  long long c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string label(const Run& r) {
  return std::string(kind_name(r.kind)) + " n=" + std::to_string(r.n);
}

// Runs a suite over several configurations and folds the named checks: the
// worst value, the total count and every failure.
struct Fold {
  std::vector<std::string> names;
  std::vector<double> worst;
  std::vector<long> count;
  std::map<std::string, long> tallies;
  Outcome out;

  Fold(std::vector<std::string> n, std::vector<Bound> bounds)
      : names(std::move(n)), count(names.size(), 0) {
    for (Bound b : bounds) worst.push_back(b == Bound::kAtMost ? 0 : 1e300);
  }

  SuiteReport add(const char* suite, const Run& run) {
    SuiteConfig cfg;
    cfg.kind = run.kind;
    cfg.n = run.n;
    cfg.samples = run.samples;
    cfg.mode = run.mode;
    cfg.seed = 20261014;
    SuiteReport r = run_suite(suite, cfg);
    for (const CheckResult& c : r.checks) {
      if (!c.pass()) {
        out.pass = false;
        out.detail += " [" + label(run) + " " + c.name + ": " +
                      std::to_string(c.failures) + " failures, worst " + fmt(c.worst) + "]";
      }
      for (size_t i = 0; i < names.size(); ++i) {
        if (c.name != names[i]) continue;
        count[i] += c.count;
        if (c.bound == Bound::kAtMost)
          worst[i] = std::max(worst[i], c.worst);
        else
          worst[i] = std::min(worst[i], c.worst);
      }
    }
    for (const auto& [k, v] : r.tallies) tallies[k] += v;
    return r;
  }

  std::string summary() const {
    std::string s;
    for (size_t i = 0; i < names.size(); ++i)
      s += " " + names[i] + " worst " + fmt(worst[i]) + " over " + std::to_string(count[i]) + ";";
    return s;
  }
};

Outcome combinatorics() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 4; n <= 9; ++n) {
    const ArcComplexStats s = arc_complex_stats(Kind::kIdeal, n);
    if (s.arcs != n * (n - 3) / 2 || s.tops != catalan(n - 2) || s.euler != sphere_euler(n - 4)) {
      o.pass = false;
      o.detail += " [ideal n=" + std::to_string(n) + "]";
    }
  }
  for (int n = 2; n <= 6; ++n) {
    const ArcComplexStats s = arc_complex_stats(Kind::kPunctured, n);
    if (s.euler != sphere_euler(n - 2) || (n == 2 && s.arcs != 2)) {
      o.pass = false;
      o.detail += " [punctured n=" + std::to_string(n) + "]";
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!(secs < 60)) o.pass = false;
  o.detail = " ideal n=4..9 and punctured n=2..6 in " + fmt(secs) + " s (limit 60 s);" + o.detail;
  return o;
}

Outcome manifold_links() {
  Outcome o;
  long long simplices = 0, links = 0, corners = 0;
  auto scan = [&](Kind k, int lo, int hi) {
    for (int n = lo; n <= hi; ++n) {
      const ArcComplexStats s = arc_complex_stats(k, n);
      for (const LinkRow& r : s.links) {
        simplices += r.simplices;
        links += r.link_violations;
        corners += r.corner_violations;
      }
    }
  };
  scan(Kind::kDecorated, 3, 5);
  scan(Kind::kDecoratedPunctured, 2, 4);
  o.pass = links == 0 && corners == 0;
  o.detail = " " + std::to_string(simplices) + " filling simplices, " + std::to_string(links) +
             " link violations, " + std::to_string(corners) + " corner violations";
  return o;
}

Outcome basis() {
  Fold f({"normalized-determinant"}, {Bound::kAbove});
  for (int n = 4; n <= 8; ++n) f.add("basis", {Kind::kIdeal, n, 100});
  for (int n = 2; n <= 6; ++n) f.add("basis", {Kind::kPunctured, n, 100});
  for (int n = 3; n <= 5; ++n) f.add("basis", {Kind::kDecorated, n, 100});
  for (int n = 2; n <= 4; ++n) f.add("basis", {Kind::kDecoratedPunctured, n, 100});
  f.out.detail = " |det| > 1e-8:" + f.summary() + f.out.detail;
  return f.out;
}

Outcome length_lemma() {
  Fold f({"crossing-sum", "finite-difference"}, {Bound::kAtMost, Bound::kAtMost});
  for (int n = 3; n <= 5; ++n) f.add("length-derivative", {Kind::kDecorated, n, 200});
  for (int n = 2; n <= 4; ++n) f.add("length-derivative", {Kind::kDecoratedPunctured, n, 200});
  for (int n = 4; n <= 7; ++n) f.add("length-derivative", {Kind::kIdeal, n, 100});
  if (f.count[0] < 1000) f.out.pass = false;
  f.out.detail = " crossing sum <= 1e-8, finite difference <= 1e-6 at h=1e-5:" + f.summary() +
                 f.out.detail;
  return f.out;
}

Outcome codim1() {
  Fold f({"kernel-dimension", "shared-nonpositive", "closed-form-residual", "closed-form-kernel"},
         {Bound::kAtMost, Bound::kAtMost, Bound::kAtMost, Bound::kAtMost});
  // Sizes with at least 100 distinct adjacent pairs, each checked on every
  // sampled metric.
  const Run runs[] = {{Kind::kIdeal, 8, 5, WaistMode::kFoot},
                      {Kind::kPunctured, 5, 5, WaistMode::kFoot},
                      {Kind::kDecorated, 5, 5, WaistMode::kFoot},
                      {Kind::kDecoratedPunctured, 4, 5, WaistMode::kFoot}};
  std::string pairs;
  for (const Run& r : runs) {
    const SuiteReport rep = f.add("codim1", r);
    const auto it = rep.tallies.find("pairs");
    const long p = it == rep.tallies.end() ? 0 : it->second;
    const auto jt = rep.tallies.find("closed-form-pairs");
    const long q = jt == rep.tallies.end() ? 0 : jt->second;
    pairs += " " + label(r) + ": " + std::to_string(p / r.samples) + " pairs x " +
             std::to_string(r.samples) + " metrics, " + std::to_string(q) + " closed-form;";
    if (p / r.samples < 100) f.out.pass = false;
    if (!is_decorated(r.kind) && q == 0) f.out.pass = false;
  }
  f.out.detail = " kernel dim 1, pattern (+,+,-..-), residual <= 1e-12, kernel <= 1e-9;" +
                 pairs + f.summary() + f.out.detail;
  return f.out;
}

Outcome codim2() {
  Fold f({"angle-sum"}, {Bound::kAtMost});
  for (int n = 5; n <= 7; ++n) f.add("codim2", {Kind::kIdeal, n, 10});
  for (int n = 3; n <= 5; ++n) f.add("codim2", {Kind::kPunctured, n, 10});
  for (int n = 3; n <= 4; ++n) f.add("codim2", {Kind::kDecorated, n, 10});
  for (int n = 2; n <= 3; ++n) f.add("codim2", {Kind::kDecoratedPunctured, n, 10});
  std::string cycles;
  for (int k = 4; k <= 6; ++k) {
    const auto it = f.tallies.find("cycle-length-" + std::to_string(k));
    cycles += " " + std::to_string(it == f.tallies.end() ? 0 : it->second) + " length-" +
              std::to_string(k) + ",";
  }
  f.out.detail = " |sum - 2pi| <= 1e-9:" + cycles + f.summary() + f.out.detail;
  return f.out;
}

Outcome cusp() {
  Fold f({"trace-pairing"}, {Bound::kAtMost});
  for (WaistMode mode : {WaistMode::kIntrinsic, WaistMode::kFoot}) {
    f.add("cusp", {Kind::kPunctured, 3, 50, mode});
    f.add("cusp", {Kind::kPunctured, 5, 50, mode});
    f.add("cusp", {Kind::kDecoratedPunctured, 2, 50, mode});
    f.add("cusp", {Kind::kDecoratedPunctured, 4, 50, mode});
  }
  f.out.detail = " trace <= 1e-12:" + f.summary() + f.out.detail;
  return f.out;
}

Outcome admissibility() {
  Fold f({"min-length-derivative"}, {Bound::kAbove});
  for (int n = 3; n <= 5; ++n) f.add("admissible", {Kind::kDecorated, n, 200});
  for (int n = 2; n <= 3; ++n) f.add("admissible", {Kind::kDecoratedPunctured, n, 200});
  if (f.count[0] < 1000) f.out.pass = false;
  f.out.detail = " dl > 0 for |winding| <= 3:" + f.summary() + f.out.detail;
  return f.out;
}

Outcome proper() {
  Fold f({"blocked-ratio", "norm-ratio"}, {Bound::kAtMost, Bound::kAtLeast});
  f.add("proper", {Kind::kDecorated, 4, 10});
  f.add("proper", {Kind::kDecorated, 5, 10});
  f.add("proper", {Kind::kDecoratedPunctured, 3, 10});
  // One observation per sequence.
  if (f.count[1] < 20) f.out.pass = false;
  f.out.detail = " blocked ratio < 1e-3, norm ratio >= 0.1:" + f.summary() + f.out.detail;
  return f.out;
}

Outcome lemmas() {
  Fold f({"centre-orthogonality", "ratio-identity", "centre-ordering", "chord-duality"},
         {Bound::kAtMost, Bound::kAtMost, Bound::kAtMost, Bound::kAtMost});
  f.add("lemmas", {Kind::kIdeal, 4, 1000});
  for (long c : f.count)
    if (c < 1000) f.out.pass = false;
  f.out.detail = " tolerance 1e-9:" + f.summary() + f.out.detail;
  return f.out;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"combinatorics", combinatorics},
      {"manifold links", manifold_links},
      {"basis", basis},
      {"length derivative", length_lemma},
      {"codimension one", codim1},
      {"codimension two", codim2},
      {"cusp preservation", cusp},
      {"admissibility", admissibility},
      {"properness", proper},
      {"geometry lemmas", lemmas},
  };
  int failed = 0, id = 0;
  for (const auto& [name, run] : criteria) {
    ++id;
    Outcome o;
    try {
      o = run();
    } catch (const Error& e) {
      o = {false, std::string(" error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d %-18s %s:%s\n", id, name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", id - failed, id);
  return failed == 0 ? 0 : 1;
}
