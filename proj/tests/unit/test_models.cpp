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
#include <numbers>

#include "doctest.h"
#include "stripcomplex/error.h"
#include "stripcomplex/models.h"

using namespace stripcomplex;

TEST_SUITE("models") {

TEST_CASE("model conversions round trip") {
  const UhpPoint z{0.7, 1.9};
  const MinVector p = to_hyperboloid(z);
  CHECK(min_norm2(p) == doctest::Approx(-1).epsilon(1e-14));
  const UhpPoint back = to_uhp(p);
  CHECK(back.re == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(back.im == doctest::Approx(1.9).epsilon(1e-14));
  const KleinPoint k = to_klein(p);
  const MinVector q = to_hyperboloid(k);
  CHECK(std::abs(q.x - p.x) + std::abs(q.y - p.y) + std::abs(q.z - p.z) < 1e-12);
  // i is the centre of the disk.
  const KleinPoint c = to_klein(to_hyperboloid(UhpPoint{0, 1}));
  CHECK(std::abs(c.x) + std::abs(c.y) < 1e-15);
}

TEST_CASE("distances agree across models") {
  // d(i, 2i) = ln 2.
  CHECK(uhp_distance({0, 1}, {0, 2}) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(hyperbolic_distance(to_hyperboloid(UhpPoint{0, 1}), to_hyperboloid(UhpPoint{0, 2})) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-13));
  // Klein distance from the centre to r is artanh(r).
  CHECK(klein_distance({0, 0}, {0.5, 0}) == doctest::Approx(std::atanh(0.5)).epsilon(1e-14));
  const UhpPoint a{-0.3, 0.8}, b{1.4, 0.25};
  CHECK(hyperbolic_distance(to_hyperboloid(a), to_hyperboloid(b)) ==
        doctest::Approx(uhp_distance(a, b)).epsilon(1e-12));
  CHECK(klein_distance(to_klein(to_hyperboloid(a)), to_klein(to_hyperboloid(b))) ==
        doctest::Approx(uhp_distance(a, b)).epsilon(1e-12));
}

TEST_CASE("nearby points keep their distance") {
  const UhpPoint a{0.5, 1.0}, b{0.5 + 1e-9, 1.0};
  CHECK(hyperbolic_distance(to_hyperboloid(a), to_hyperboloid(b)) ==
        doctest::Approx(1e-9).epsilon(1e-6));
}

TEST_CASE("boundary light vectors") {
  CHECK(boundary_point(boundary_light_vector(2.5)) == doctest::Approx(2.5));
  CHECK(is_infinite(boundary_point(boundary_light_vector(kInfinity))));
  CHECK(std::abs(min_norm2(boundary_light_vector(-1.25))) < 1e-14);
}

TEST_CASE("geodesics") {
  const Geodesic g = Geodesic::through(3, -1);
  CHECK(g.left() == -1);
  CHECK(g.right() == 3);
  CHECK(g.center() == 1);
  CHECK(g.radius() == 2);
  CHECK(Geodesic::through(kInfinity, 4).is_vertical());
  CHECK(Geodesic::through(kInfinity, 4).foot() == 4);
  CHECK_THROWS_AS(Geodesic::through(1, 1), Error);
  const Geodesic h = Geodesic::from_vector(g.vector());
  CHECK(h.left() == doctest::Approx(-1));
  CHECK(h.right() == doctest::Approx(3));
  // Top of the semicircle lies on it.
  CHECK(on_geodesic(to_hyperboloid(UhpPoint{1, 2}), g, 1e-12));
}

TEST_CASE("intersections and angles") {
  const Geodesic g1 = Geodesic::through(-1, 1), g2 = Geodesic::vertical(0);
  const auto p = intersection(g1, g2);
  REQUIRE(p.has_value());
  const UhpPoint z = to_uhp(*p);
  CHECK(std::abs(z.re) < 1e-14);
  CHECK(z.im == doctest::Approx(1));
  CHECK(intersection_angle(g1, g2, z) == doctest::Approx(std::numbers::pi / 2));
  CHECK_FALSE(intersection(Geodesic::through(0, 1), Geodesic::through(2, 3)).has_value());
}

TEST_CASE("common perpendicular of disjoint semicircles") {
  // Centre (a2 b2 - a1 b1) / (a2 + b2 - a1 - b1) = 7/5, radius^2 = 1.4^2 - 1.
  const Geodesic p = common_perpendicular(Geodesic::through(-1, 1), Geodesic::through(2, 3));
  CHECK(p.center() == doctest::Approx(1.4).epsilon(1e-14));
  CHECK(p.radius() * p.radius() == doctest::Approx(0.96).epsilon(1e-13));
  // Perpendicular to a vertical line: centred at its foot.
  const Geodesic q = common_perpendicular(Geodesic::vertical(0), Geodesic::through(2, 4));
  CHECK(std::abs(q.center()) < 1e-13);
  CHECK(q.radius() == doctest::Approx(std::sqrt(8.0)).epsilon(1e-13));
  CHECK_THROWS_AS(common_perpendicular(Geodesic::through(0, 1), Geodesic::through(1, 2)), Error);
  CHECK_THROWS_AS(common_perpendicular(Geodesic::through(0, 2), Geodesic::through(1, 3)), Error);
}

TEST_CASE("cross ratio") {
  CHECK(cross_ratio(0, 1, 2, 3) == doctest::Approx(4));
  CHECK(cross_ratio(kInfinity, 0, 1, 3) == doctest::Approx(3.0 / 2.0));
  CHECK_THROWS_AS(cross_ratio(kInfinity, kInfinity, 1, 2), Error);
}

TEST_CASE("centre lemmas") {
  const CenterLemmaReport r = verify_center_lemmas(
      Geodesic::through(-3, -2), Geodesic::through(0, 1), Geodesic::through(4, 7));
  CHECK(r.x[0] == -2.5);
  CHECK(r.x[1] == 0.5);
  CHECK(r.x[2] == 5.5);
  CHECK(r.ratio_residual < 1e-12);
  CHECK(r.ordered);
  CHECK_THROWS_AS(verify_center_lemmas(Geodesic::through(-3, 3), Geodesic::through(0, 1),
                                       Geodesic::through(4, 7)),
                  Error);
}

}  // TEST_SUITE
