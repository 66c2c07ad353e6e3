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
#include <cmath>

#include "doctest.h"
#include "stripcomplex/decorations.h"
#include "stripcomplex/error.h"

using namespace stripcomplex;

TEST_SUITE("decorations") {

TEST_CASE("half-plane round trip") {
  for (const UhpHoroball h : {UhpHoroball{0.3, 0.7}, UhpHoroball{kInfinity, 2.5},
                              UhpHoroball{-4, 0.01}}) {
    const UhpHoroball b = horoball_to_uhp(horoball_from_uhp(h));
    if (is_infinite(h.base))
      CHECK(is_infinite(b.base));
    else
      CHECK(b.base == doctest::Approx(h.base).epsilon(1e-13));
    CHECK(b.size == doctest::Approx(h.size).epsilon(1e-13));
  }
}

TEST_CASE("connection lengths match ln((x1 - x2)^2 / (h1 h2))") {
  const Horoball a = horoball_from_uhp({0, 1}), b = horoball_from_uhp({2, 1});
  CHECK(connection_length(a, b) == doctest::Approx(std::log(4.0)).epsilon(1e-14));
  CHECK(lambda_length(a, b) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-14));
  const Horoball c = horoball_from_uhp({0.5, 0.2}), d = horoball_from_uhp({1.75, 0.6});
  CHECK(connection_length(c, d) ==
        doctest::Approx(std::log(1.25 * 1.25 / (0.2 * 0.6))).epsilon(1e-13));
  // Height H at infinity: ln(H / h).
  const Horoball top = horoball_from_uhp({kInfinity, 3});
  CHECK(connection_length(top, c) == doctest::Approx(std::log(3 / 0.2)).epsilon(1e-13));
}

TEST_CASE("disjointness against circle geometry") {
  // Circles tangent to the line at x with diameter h are disjoint iff
  // (x1 - x2)^2 >= h1 h2.
  const double xs[] = {0.0, 0.4, 1.3};
  const double hs[] = {0.1, 0.5, 1.2};
  for (double x2 : xs)
    for (double h1 : hs)
      for (double h2 : hs) {
        if (x2 == 0) continue;
        const double l = connection_length(horoball_from_uhp({0, h1}), horoball_from_uhp({x2, h2}));
        CHECK((l >= 0) == (x2 * x2 >= h1 * h2));
      }
}

TEST_CASE("horocyclic level") {
  const Horoball h = horoball_from_uhp({kInfinity, 2});
  CHECK(std::abs(horocyclic_level(to_hyperboloid(UhpPoint{5, 2}), h)) < 1e-13);
  CHECK(horocyclic_level(to_hyperboloid(UhpPoint{5, 4}), h) < 0);
  CHECK(horocyclic_level(to_hyperboloid(UhpPoint{5, 1}), h) > 0);
}

TEST_CASE("invalid horoballs") {
  CHECK_THROWS_AS(make_horoball({0, 0, 1}), Error);
  CHECK_THROWS_AS(make_horoball({1, 0, -1}), Error);
}

}  // TEST_SUITE
