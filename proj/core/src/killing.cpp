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
#include "stripcomplex/killing.h"

#include <Eigen/LU>
#include <cmath>

#include "stripcomplex/error.h"

namespace stripcomplex {

Eigen::Matrix2d to_matrix(const KillingField& k) {
  Eigen::Matrix2d m;
  m << k.b / 2, k.c, -k.a, -k.b / 2;
  return m;
}

KillingField from_matrix(const Eigen::Matrix2d& m) {
  return {-m(1, 0), m(0, 0) - m(1, 1), m(0, 1)};
}

MinVector to_min_vector(const KillingField& k) {
  return {(k.c - k.a) / 2, k.b / 2, (k.c + k.a) / 2};
}

KillingField from_min_vector(const MinVector& v) {
  return {v.z - v.x, 2 * v.y, v.x + v.z};
}

double discriminant(const KillingField& k) { return k.b * k.b - 4 * k.a * k.c; }

KillingType classify(const KillingField& k, double eps) {
  switch (classify(to_min_vector(k), eps)) {
    case CausalClass::kSpacelike: return KillingType::kHyperbolic;
    case CausalClass::kTimelike: return KillingType::kElliptic;
    default: return KillingType::kParabolic;
  }
}

double boundary_velocity(const KillingField& k, double x) {
  if (is_infinite(x)) return k.a;
  return k(x);
}

MinVector vector_velocity(const KillingField& k, const MinVector& p) {
  return -2 * min_cross(to_min_vector(k), p);
}

MinVector horoball_velocity(const KillingField& k, const Horoball& h) {
  return vector_velocity(k, h.v);
}

double translation_speed(const KillingField& k) {
  return std::sqrt(std::max(0.0, discriminant(k)));
}

Eigen::Matrix2d flow(const KillingField& k, double t) {
  const Eigen::Matrix2d m = to_matrix(k);
  const double delta = discriminant(k) / 4;
  const double q = delta * t * t;
  double ch, sh;  // cosh(t sqrt(delta)) and sinh(t sqrt(delta)) / sqrt(delta)
  if (std::abs(q) < 1e-8) {
    ch = 1 + q / 2 + q * q / 24;
    sh = t * (1 + q / 6 + q * q / 120);
  } else if (delta > 0) {
    const double r = std::sqrt(delta);
    ch = std::cosh(r * t);
    sh = std::sinh(r * t) / r;
  } else {
    const double r = std::sqrt(-delta);
    ch = std::cos(r * t);
    sh = std::sin(r * t) / r;
  }
  return ch * Eigen::Matrix2d::Identity() + sh * m;
}

double mobius(const Eigen::Matrix2d& g, double x) {
  if (is_infinite(x)) {
    if (g(1, 0) == 0) return kInfinity;
    return g(0, 0) / g(1, 0);
  }
  const double den = g(1, 0) * x + g(1, 1);
  if (den == 0) return kInfinity;
  return (g(0, 0) * x + g(0, 1)) / den;
}

MinVector act(const Eigen::Matrix2d& g, const MinVector& v) {
  const Eigen::Matrix2d m = g * to_matrix(from_min_vector(v)) * g.inverse();
  return to_min_vector(from_matrix(m));
}

KillingField transport(const Eigen::Matrix2d& g, const KillingField& k) {
  return from_matrix(g * to_matrix(k) * g.inverse());
}

KillingField perpendicular_hyperbolic(const Geodesic& alpha, const MinVector& p,
                                      double speed, const MinVector& toward) {
  if (!(speed > 0)) throw Error(ErrorCode::kInvalidInput, "speed must be > 0");
  if (!on_geodesic(p, alpha))
    throw Error(ErrorCode::kInvalidInput, "point is not on the geodesic");
  const MinVector s = alpha.vector();
  const double side = min_inner(toward, s);
  if (side == 0) throw Error(ErrorCode::kInvalidInput, "side is ambiguous");
  const MinVector axis = normalize_spacelike(min_cross(p, s));
  KillingField k = from_min_vector(axis) * (speed / 2);
  if (min_inner(vector_velocity(k, p), s) * side < 0) k = -k;
  return k;
}

KillingField perpendicular_hyperbolic(const Geodesic& alpha, const MinVector& p,
                                      double speed, double toward) {
  return perpendicular_hyperbolic(alpha, p, speed,
                                  boundary_light_vector(toward));
}

KillingField perpendicular_hyperbolic(const Geodesic& alpha, const UhpPoint& p,
                                      double speed, double toward) {
  return perpendicular_hyperbolic(alpha, to_hyperboloid(p), speed, toward);
}

KillingField parabolic_at(double q, double speed, int direction) {
  if (direction != 1 && direction != -1)
    throw Error(ErrorCode::kInvalidInput, "direction must be +1 or -1");
  const double s = speed * direction;
  if (is_infinite(q)) return {0, 0, s};
  return {s, -2 * s * q, s * q * q};
}

double trace_pairing(const KillingField& k, const Eigen::Matrix2d& g) {
  return (to_matrix(k) * g).trace();
}

}  // namespace stripcomplex
