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
#include <set>

#include "doctest.h"
#include "stripcomplex/sampling.h"

using namespace stripcomplex;

TEST_SUITE("sampling") {

TEST_CASE("sample seeds are distinct and reproducible") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(sample_seed(7, i));
  CHECK(seen.size() == 1000);
  CHECK(sample_seed(7, 3) == sample_seed(7, 3));
  CHECK(sample_seed(7, 3) != sample_seed(8, 3));
}

TEST_CASE("uniform draws stay in range") {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform(-2, 3);
    CHECK(u >= -2);
    CHECK(u < 3);
    CHECK(rng.index(7) < 7);
    const double l = rng.log_uniform(0.05, 0.9);
    CHECK(l >= 0.05);
    CHECK(l <= 0.9);
  }
}

TEST_CASE("random metrics are valid") {
  for (Kind k : {Kind::kIdeal, Kind::kPunctured, Kind::kDecorated, Kind::kDecoratedPunctured}) {
    Rng rng(11);
    for (int i = 0; i < 50; ++i) CHECK_NOTHROW(validate_metric(random_metric(k, 4, rng)));
  }
}

TEST_CASE("draws are a function of the seed") {
  Rng a(99), b(99);
  const PolygonMetric m1 = random_metric(Kind::kDecorated, 5, a);
  const PolygonMetric m2 = random_metric(Kind::kDecorated, 5, b);
  CHECK(m1.x == m2.x);
  CHECK(m1.sizes == m2.sizes);
  const ArcComplex ac(Kind::kDecorated, 5);
  CHECK(random_top_simplex(ac, a) == random_top_simplex(ac, b));
}

TEST_CASE("random simplices") {
  const ArcComplex ac(Kind::kDecorated, 4);
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Simplex t = random_top_simplex(ac, rng);
    CHECK(static_cast<int>(t.size()) == ac.top_size());
    CHECK(ac.is_simplex(t));
    const Simplex f = random_filling_simplex(ac, rng);
    CHECK(ac.is_filling(f));
    const BarycentricPoint x = random_interior_point(ac, f, rng);
    double s = 0;
    for (double w : x.weights) {
      CHECK(w > 0);
      s += w;
    }
    CHECK(s == doctest::Approx(1));
  }
}

}  // TEST_SUITE
