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
#include "doctest.h"
#include "stripcomplex/error.h"
#include "stripcomplex/suites.h"

using namespace stripcomplex;

TEST_SUITE("suites") {

TEST_CASE("every suite passes a short run") {
  const std::pair<const char*, Kind> runs[] = {
      {"basis", Kind::kIdeal},          {"codim1", Kind::kPunctured},
      {"codim2", Kind::kDecorated},     {"length-derivative", Kind::kDecorated},
      {"admissible", Kind::kDecorated}, {"proper", Kind::kDecorated},
      {"cusp", Kind::kPunctured},       {"lemmas", Kind::kIdeal}};
  for (const auto& [name, kind] : runs) {
    CAPTURE(name);
    SuiteConfig cfg;
    cfg.kind = kind;
    cfg.n = 4;
    cfg.samples = 5;
    const SuiteReport r = run_suite(name, cfg);
    CHECK(r.pass());
    CHECK_FALSE(r.checks.empty());
  }
}

TEST_CASE("reports do not depend on the thread count") {
  SuiteConfig cfg;
  cfg.kind = Kind::kDecorated;
  cfg.n = 4;
  cfg.samples = 12;
  cfg.threads = 1;
  const SuiteReport a = run_suite("codim1", cfg);
  cfg.threads = 3;
  const SuiteReport b = run_suite("codim1", cfg);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].worst == b.checks[i].worst);
    CHECK(a.checks[i].count == b.checks[i].count);
  }
  CHECK(a.tallies == b.tallies);
}

TEST_CASE("a failing sample replays alone") {
  SuiteConfig cfg;
  cfg.kind = Kind::kIdeal;
  cfg.n = 6;
  cfg.samples = 4;
  const double all = run_suite("basis", cfg).find("normalized-determinant")->worst;
  double best = 1e300;
  for (long i = 0; i < 4; ++i) {
    SuiteConfig one = cfg;
    one.samples = 1;
    one.first_sample = i;
    best = std::min(best, run_suite("basis", one).find("normalized-determinant")->worst);
  }
  CHECK(best == all);
}

TEST_CASE("a tightened bound fails") {
  SuiteConfig cfg;
  cfg.kind = Kind::kIdeal;
  cfg.n = 5;
  cfg.samples = 3;
  cfg.tol = 1e30;
  CHECK_FALSE(run_suite("basis", cfg).pass());
}

TEST_CASE("suite applicability") {
  CHECK_THROWS_AS(check_suite("cusp", Kind::kIdeal), Error);
  CHECK_THROWS_AS(check_suite("nope", Kind::kIdeal), Error);
  CHECK_NOTHROW(check_suite("lemmas", Kind::kDecorated));
}

TEST_CASE("arc complex statistics") {
  const ArcComplexStats s = arc_complex_stats(Kind::kDecorated, 4);
  CHECK(s.pure);
  for (const LinkRow& row : s.links) {
    CHECK(row.link_violations == 0);
    CHECK(row.corner_violations == 0);
  }
}

}  // TEST_SUITE
