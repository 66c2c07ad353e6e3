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
#include "stripcomplex/error.h"
#include "stripcomplex/polygons.h"

using namespace stripcomplex;

TEST_SUITE("polygons") {

TEST_CASE("dimensions") {
  CHECK(tangent_dimension(Kind::kIdeal, 6) == 3);
  CHECK(tangent_dimension(Kind::kPunctured, 4) == 3);
  CHECK(tangent_dimension(Kind::kDecorated, 4) == 5);
  CHECK(tangent_dimension(Kind::kDecoratedPunctured, 3) == 5);
  CHECK(parse_kind("decorated-punctured") == Kind::kDecoratedPunctured);
  CHECK_THROWS_AS(parse_kind("square"), Error);
}

TEST_CASE("validation errors carry codes") {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidInput;
  };
  CHECK(code([] { make_metric(Kind::kIdeal, 5, {3, 2}); }) == ErrorCode::kOrderingViolation);
  CHECK(code([] { make_metric(Kind::kIdeal, 5, {3}); }) == ErrorCode::kWrongArity);
  CHECK(code([] { make_metric(Kind::kPunctured, 3, {0.5, 1.2}); }) ==
        ErrorCode::kOrderingViolation);
  CHECK(code([] { make_metric(Kind::kDecorated, 3, {}, {1, 1.2, 1.2}); }) ==
        ErrorCode::kDecorationOverlap);
  CHECK_NOTHROW(make_metric(Kind::kDecorated, 3, {}, {3, 0.4, 0.3}));
}

TEST_CASE("coordinates round trip") {
  const PolygonMetric m = make_metric(Kind::kDecoratedPunctured, 3, {0.3, 0.7}, {0.1, 0.2, 0.15});
  const PolygonMetric r = metric_from_coordinates(m.kind, m.n, m.coordinates());
  for (int i = 0; i < 3; ++i) {
    CHECK(r.x[i] == doctest::Approx(m.x[i]));
    CHECK(r.sizes[i] == doctest::Approx(m.sizes[i]));
  }
}

TEST_CASE("lifts and connections in punctured kinds") {
  const PolygonMetric m = make_metric(Kind::kPunctured, 3, {0.3, 0.7});
  CHECK(m.lift(4) == doctest::Approx(1.3));
  CHECK(m.lift(-1) == doctest::Approx(-0.3));
  // 3 loops and 3 pairs with 2 kmax + 1 windings each.
  CHECK(connections(m.kind, 3, 2).size() == 3 * 2 + 3 * 5);
  const Connection c = canonical_connection(m.kind, 3, {2, 1, 1});
  CHECK(c == Connection{1, 2, -1});
  const Geodesic g = connection_geodesic(m, {0, 0, 1});
  CHECK(g.left() == 0);
  CHECK(g.right() == 1);
}

TEST_CASE("length derivatives match finite differences") {
  const PolygonMetric m = make_metric(Kind::kDecorated, 5, {2.5, 4}, {5, 0.4, 0.3, 0.5, 0.6});
  TangentVector v{m.kind, m.n, {0.3, -0.2, 0.1, 0.5, -0.4, 0.2, 0.05}};
  const double h = 1e-6;
  std::vector<double> cp = m.coordinates(), cm = cp;
  for (size_t i = 0; i < cp.size(); ++i) {
    cp[i] += h * v.d[i];
    cm[i] -= h * v.d[i];
  }
  const PolygonMetric mp = metric_from_coordinates(m.kind, m.n, cp);
  const PolygonMetric mm = metric_from_coordinates(m.kind, m.n, cm);
  for (const Connection& c : connections(m.kind, m.n)) {
    const double fd = (connection_length(mp, c) - connection_length(mm, c)) / (2 * h);
    CHECK(length_derivative(m, v, c) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("admissibility") {
  const PolygonMetric m = make_metric(Kind::kDecorated, 3, {}, {3, 0.4, 0.3});
  // Shrinking every horoball lengthens every connection; at infinity the
  // coordinate is a height, so shrinking raises it.
  TangentVector v{m.kind, m.n, {1, -1, -1}};
  CHECK(admissible(m, v));
  CHECK_FALSE(admissible(m, v * -1));
  CHECK_FALSE(admissible(m, zero_tangent(m.kind, m.n)));
}

TEST_CASE("rotation of punctured polygons") {
  const PolygonMetric m = make_metric(Kind::kDecoratedPunctured, 3, {0.3, 0.7}, {0.1, 0.2, 0.15});
  const PolygonMetric r = rotate_punctured(m);
  CHECK(r.x[0] == 0);
  CHECK(r.x[1] == doctest::Approx(0.4));
  CHECK(r.x[2] == doctest::Approx(0.7));
  CHECK(r.sizes[2] == 0.1);
  CHECK_NOTHROW(validate_metric(r));
  CHECK_THROWS_AS(rotate_punctured(make_metric(Kind::kIdeal, 4, {2})), Error);
}

}  // TEST_SUITE
