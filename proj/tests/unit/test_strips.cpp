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
#include <vector>

#include "doctest.h"
#include "stripcomplex/error.h"
#include "stripcomplex/strips.h"

using namespace stripcomplex;

namespace {

struct Frozen {
  Kind kind;
  int n;
  std::vector<double> free, sizes;
  ArcClass arc;
  std::vector<double> intrinsic, foot;
};

// Reference tangents from an independent high-precision construction in the
// half-plane (circle geometry, explicit Moebius renormalization).
const Frozen kFrozen[] = {
    {Kind::kIdeal, 5, {2.2, 3.7}, {}, {0, 2},
     {0.6, 1.1795454545454545}, {0.6, 1.0090909090909091}},
    {Kind::kIdeal, 5, {2.2, 3.7}, {}, {1, 3},
     {-0.46666666666666667, -0.50454545454545455},
     {-0.49333333333333333, -0.60545454545454545}},
    {Kind::kIdeal, 5, {2.2, 3.7}, {}, {0, 3},
     {0.17837837837837838, 1.05}, {0, 0.75}},
    {Kind::kIdeal, 6, {1.5, 2.75, 4}, {}, {1, 4},
     {-0.17234848484848485, -0.61979166666666667, -0.63636363636363636},
     {-0.18518518518518519, -0.64814814814814815, -0.70707070707070707}},
    {Kind::kIdeal, 4, {2.5}, {}, {0, 2}, {0.75}, {0.75}},
    {Kind::kDecorated, 4, {2.5}, {3, 0.4, 0.3, 0.5}, {0, 4},
     {0.75, 0.4, -0.1, 0.1, 0.4}, {0.75, 0.3, 0, 0, 0.3}},
    {Kind::kDecorated, 5, {2.5, 4}, {5, 0.4, 0.3, 0.5, 0.6}, {2, 6},
     {-0.5625, -0.6, -0.15, -0.15, -0.35, -0.4, -0.15},
     {-0.6, -0.72, -0.18, -0.18, -0.4, -0.4, -0.18}},
};

void check_close(const TangentVector& v, const std::vector<double>& want) {
  REQUIRE(v.d.size() == want.size());
  for (size_t i = 0; i < want.size(); ++i)
    CHECK(std::abs(v.d[i] - want[i]) < 1e-10);
}

}  // namespace

TEST_SUITE("strips") {

TEST_CASE("infinitesimal strips match frozen references") {
  for (const Frozen& f : kFrozen) {
    CAPTURE(f.arc.u);
    CAPTURE(f.arc.v);
    const PolygonMetric m = make_metric(f.kind, f.n, f.free, f.sizes);
    StripTemplate t;
    check_close(infinitesimal_strip(m, f.arc, t), f.intrinsic);
    t.mode = WaistMode::kFoot;
    check_close(infinitesimal_strip(m, f.arc, t), f.foot);
  }
}

TEST_CASE("strip vectors are derivatives of finite strips") {
  const PolygonMetric m = make_metric(Kind::kDecorated, 5, {2.5, 4}, {5, 0.4, 0.3, 0.5, 0.6});
  const StripTemplate t;
  for (const ArcClass& a : enumerate_arcs(m.kind, m.n)) {
    CAPTURE(a.u);
    CAPTURE(a.v);
    const TangentVector v = infinitesimal_strip(m, a, t);
    const double h = 1e-6;
    const auto p = finite_strip_signed(m, a, t, h).coordinates();
    const auto q = finite_strip_signed(m, a, t, -h).coordinates();
    for (size_t i = 0; i < v.d.size(); ++i)
      CHECK(std::abs((p[i] - q[i]) / (2 * h) - v.d[i]) < 1e-6 * std::max(1.0, v.norm()));
  }
}

TEST_CASE("realized arcs") {
  const PolygonMetric m = make_metric(Kind::kDecorated, 4, {2.5}, {3, 0.4, 0.3, 0.5});
  const RealizedArc r = realize_arc(m, {0, 4});
  CHECK(r.type == StripType::kHyperbolic);
  CHECK(on_geodesic(r.waist, r.carrier, 1e-10));
  // Vertex to edge arcs are parabolic.
  const RealizedArc s = realize_arc(m, {1, 4});
  CHECK(s.type == StripType::kParabolic);
  CHECK(classify(s.field) == KillingType::kParabolic);
  CHECK_THROWS_AS(realize_arc(m, {0, 1}), Error);
}

TEST_CASE("basis matrix of a triangulation is invertible") {
  const PolygonMetric m = make_metric(Kind::kIdeal, 6, {1.5, 2.75, 4});
  const BasisResult b = basis_matrix(m, {{0, 2}, {0, 3}, {0, 4}});
  CHECK(b.matrix.rows() == 3);
  CHECK(std::abs(b.normalized_det) > 1e-3);
  CHECK(b.conditioning > 0);
}

TEST_CASE("closed-form flip relations") {
  const ClosedForm c = codim1_closed_form(-3, -2, -1, 0, 1, 2.5, 3, 4);
  for (double r : c.residual) CHECK(r < 1e-12);
}

TEST_CASE("codimension-one kernel under a flip") {
  const PolygonMetric m = make_metric(Kind::kIdeal, 6, {1.5, 2.75, 4});
  const Codim1Result r = codim1_kernel(m, {{0, 2}, {0, 3}, {0, 4}}, {{0, 2}, {2, 4}, {0, 4}});
  CHECK(r.kernel_dimension == 1);
  CHECK(r.weak_pattern);
  CHECK(r.coefficients[0] == doctest::Approx(1));
  CHECK_THROWS_AS(codim1_kernel(m, {{0, 2}, {0, 3}, {0, 4}}, {{1, 3}, {1, 4}, {1, 5}}), Error);
}

TEST_CASE("link degree of an ideal hexagon") {
  const PolygonMetric m = make_metric(Kind::kIdeal, 6, {1.5, 2.75, 4});
  const LinkDegree d = link_degree(m, {{0, 3}});
  CHECK(d.cycle_length == 4);
  CHECK(d.same_sign);
  // The sum is signed by the orientation of the cycle.
  CHECK(std::abs(std::abs(d.angle_sum) - 2 * std::numbers::pi) < 1e-9);
}

TEST_CASE("length derivative formula agrees with the strip map") {
  const PolygonMetric m = make_metric(Kind::kDecorated, 4, {2.5}, {3, 0.4, 0.3, 0.5});
  const BarycentricPoint x = barycenter({{0, 2}, {0, 4}, {4, 6}});
  const TangentVector v = strip_map(m, x);
  for (const Connection& c : connections(m.kind, m.n)) {
    CAPTURE(c.i);
    CAPTURE(c.j);
    CHECK(std::abs(length_derivative(m, v, c) - length_derivative_formula(m, x, c)) < 1e-9);
  }
}

TEST_CASE("pruned strip map needs a filling support") {
  const PolygonMetric m = make_metric(Kind::kDecorated, 3, {}, {3, 0.4, 0.3});
  CHECK(admissible(m, strip_map(m, barycenter({{0, 2}, {0, 3}, {0, 4}}), {}, true)));
  CHECK_THROWS_AS(strip_map(m, barycenter({{0, 2}}), {}, true), Error);
}

}  // TEST_SUITE
