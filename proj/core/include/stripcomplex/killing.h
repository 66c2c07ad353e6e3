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

#include <Eigen/Core>

#include "stripcomplex/decorations.h"
#include "stripcomplex/lorentz.h"
#include "stripcomplex/models.h"

namespace stripcomplex {

// The vector field (a z^2 + b z + c) d/dz on the upper half-plane.
struct KillingField {
  double a = 0, b = 0, c = 0;

  double operator()(double z) const { return (a * z + b) * z + c; }
  double derivative(double z) const { return 2 * a * z + b; }
  KillingField operator+(const KillingField& o) const {
    return {a + o.a, b + o.b, c + o.c};
  }
  KillingField operator-(const KillingField& o) const {
    return {a - o.a, b - o.b, c - o.c};
  }
  KillingField operator-() const { return {-a, -b, -c}; }
  KillingField operator*(double s) const { return {a * s, b * s, c * s}; }
  bool operator==(const KillingField&) const = default;
};

inline KillingField operator*(double s, const KillingField& k) { return k * s; }

enum class KillingType { kHyperbolic, kParabolic, kElliptic };

// The traceless matrix [[al, be], [ga, -al]] is the field be + 2 al z - ga z^2.
Eigen::Matrix2d to_matrix(const KillingField& k);
KillingField from_matrix(const Eigen::Matrix2d& m);
// v = (x, y, z) is the field (x + z) + 2 y z - (x - z) z^2.
MinVector to_min_vector(const KillingField& k);
KillingField from_min_vector(const MinVector& v);

double discriminant(const KillingField& k);
KillingType classify(const KillingField& k, double eps = kEpsClass);

// Velocity of a boundary point; at infinity this is the velocity in the chart
// w = -1/z, i.e. the coefficient a.
double boundary_velocity(const KillingField& k, double x);

// Velocity of the light-like vector of a horoball under the flow of k. This is
// -2 (X x v) with X = to_min_vector(k); it is tangent to the light cone.
MinVector horoball_velocity(const KillingField& k, const Horoball& h);
// Same rule for any Minkowski vector (hyperboloid points in particular).
MinVector vector_velocity(const KillingField& k, const MinVector& p);

// Translation length per unit time of a hyperbolic field.
double translation_speed(const KillingField& k);

// exp(t M) in SL(2, R).
Eigen::Matrix2d flow(const KillingField& k, double t);
// Moebius action of a 2x2 matrix on the boundary, with infinity handled.
double mobius(const Eigen::Matrix2d& g, double x);
// Action on Minkowski vectors through conjugation of the traceless matrix.
MinVector act(const Eigen::Matrix2d& g, const MinVector& v);
// Push-forward: (g K)(g z) = g'(z) K(z).
KillingField transport(const Eigen::Matrix2d& g, const KillingField& k);

// Hyperbolic field whose axis crosses alpha orthogonally at p, with the given
// translation speed, moving p toward the side of alpha containing the boundary
// point toward.
KillingField perpendicular_hyperbolic(const Geodesic& alpha, const MinVector& p,
                                      double speed, double toward);
KillingField perpendicular_hyperbolic(const Geodesic& alpha, const UhpPoint& p,
                                      double speed, double toward);
// Same, with the side given by any vector off the geodesic.
KillingField perpendicular_hyperbolic(const Geodesic& alpha, const MinVector& p,
                                      double speed, const MinVector& toward);

// Parabolic field fixing q: +-speed at infinity, +-speed (z - q)^2 otherwise.
// direction must be +1 or -1.
KillingField parabolic_at(double q, double speed, int direction);

// tr(M_K g).
double trace_pairing(const KillingField& k, const Eigen::Matrix2d& g);

}  // namespace stripcomplex
