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
#include "stripcomplex/killing.h"

using namespace stripcomplex;

TEST_SUITE("killing") {

TEST_CASE("matrix and Minkowski forms round trip") {
  const KillingField k{0.3, -1.1, 2.4};
  CHECK(from_matrix(to_matrix(k)).a == doctest::Approx(k.a));
  CHECK(from_matrix(to_matrix(k)).b == doctest::Approx(k.b));
  CHECK(from_matrix(to_matrix(k)).c == doctest::Approx(k.c));
  const KillingField j = from_min_vector(to_min_vector(k));
  CHECK(j.a == doctest::Approx(k.a));
  CHECK(j.b == doctest::Approx(k.b));
  CHECK(j.c == doctest::Approx(k.c));
}

TEST_CASE("types") {
  CHECK(classify(KillingField{0, 1, 0}) == KillingType::kHyperbolic);
  CHECK(classify(KillingField{0, 0, 1}) == KillingType::kParabolic);
  CHECK(classify(KillingField{1, 0, 1}) == KillingType::kElliptic);
  CHECK(translation_speed(KillingField{0, 1, 0}) == doctest::Approx(1));
}

TEST_CASE("flows integrate the field") {
  // z' = 1: translation.
  CHECK(mobius(flow({0, 0, 1}, 0.75), 2) == doctest::Approx(2.75));
  // z' = z: dilation by e^t.
  CHECK(mobius(flow({0, 1, 0}, 0.5), 3) == doctest::Approx(3 * std::exp(0.5)));
  // z' = z^2: z / (1 - t z).
  CHECK(mobius(flow({1, 0, 0}, 0.2), 2) == doctest::Approx(2 / (1 - 0.4)));
  CHECK(is_infinite(mobius(flow({1, 0, 0}, 0.5), 2)));
}

TEST_CASE("boundary and horoball velocities") {
  const KillingField k{0.4, -0.2, 0.9};
  CHECK(boundary_velocity(k, 1.5) == doctest::Approx(k(1.5)));
  CHECK(boundary_velocity(k, kInfinity) == doctest::Approx(0.4));
  // Finite difference of the flowed horoball.
  const Horoball h = horoball_from_uhp({0.7, 0.3});
  const double t = 1e-6;
  const MinVector p = act(flow(k, t), h.v), q = act(flow(k, -t), h.v);
  const MinVector fd = (p - q) / (2 * t);
  const MinVector an = horoball_velocity(k, h);
  CHECK(euclid_norm(fd - an) < 1e-8 * std::max(1.0, euclid_norm(an)));
  CHECK(std::abs(min_inner(an, h.v)) < 1e-12);
}

TEST_CASE("transport matches conjugation") {
  const KillingField k{0.1, 0.5, -0.3};
  const Eigen::Matrix2d g = flow({0.2, -0.4, 1.0}, 0.8);
  const KillingField tk = transport(g, k);
  for (double z : {-1.0, 0.25, 2.0}) {
    // (gK)(gz) = g'(z) K(z) with g' = 1 / (cz + d)^2.
    const double d = g(1, 0) * z + g(1, 1);
    CHECK(tk(mobius(g, z)) == doctest::Approx(k(z) / (d * d)).epsilon(1e-12));
  }
}

TEST_CASE("perpendicular hyperbolic fields") {
  const Geodesic alpha = Geodesic::through(0, 2);
  const UhpPoint p{1.5, std::sqrt(0.75)};
  const KillingField k = perpendicular_hyperbolic(alpha, p, 0.5, 5.0);
  CHECK(classify(k) == KillingType::kHyperbolic);
  CHECK(translation_speed(k) == doctest::Approx(0.5));
  // The axis is swapped with itself by inversion in alpha and passes
  // through p.
  const double disc = std::sqrt(discriminant(k));
  const double r1 = (-k.b + disc) / (2 * k.a), r2 = (-k.b - disc) / (2 * k.a);
  CHECK((r1 - 1) * (r2 - 1) == doctest::Approx(1));
  CHECK(std::hypot(p.re - (r1 + r2) / 2, p.im) == doctest::Approx(std::abs(r1 - r2) / 2));
  // p moves outward toward 5.
  const MinVector v = vector_velocity(k, to_hyperboloid(p));
  CHECK(min_inner(v, alpha.vector()) * min_inner(to_hyperboloid(UhpPoint{5, 1}), alpha.vector()) > 0);
}

TEST_CASE("parabolic fields") {
  const KillingField k = parabolic_at(0.5, 2, -1);
  CHECK(k(0.5) == 0);
  CHECK(k.derivative(0.5) == 0);
  CHECK(k(1.5) == doctest::Approx(-2));
  CHECK(parabolic_at(kInfinity, 2, 1) == KillingField{0, 0, 2});
}

TEST_CASE("trace pairing") {
  const Eigen::Matrix2d t{{1, 1}, {0, 1}};
  CHECK(trace_pairing({0, 0, 1}, t) == doctest::Approx(0));
  CHECK(trace_pairing({1, 0, 0}, t) != doctest::Approx(0));
}

}  // TEST_SUITE
