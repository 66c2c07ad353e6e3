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

#include <limits>
#include <optional>
#include <variant>

#include "stripcomplex/lorentz.h"

namespace stripcomplex {

// Boundary points of the upper half-plane are reals, with +infinity for the
// point at infinity.
constexpr double kInfinity = std::numeric_limits<double>::infinity();

inline bool is_infinite(double x) { return x == kInfinity || x == -kInfinity; }

struct UhpPoint {
  double re = 0, im = 1;
};

struct KleinPoint {
  double x = 0, y = 0;
};

enum class Model { kHyperboloid, kKlein, kUhp };

using ModelPoint = std::variant<MinVector, KleinPoint, UhpPoint>;

Model model_of(const ModelPoint& p);
// Throws kInvalidInput when p is not a valid point of its model.
ModelPoint convert(const ModelPoint& p, Model to);

MinVector to_hyperboloid(const UhpPoint& z);
MinVector to_hyperboloid(const KleinPoint& k);
UhpPoint to_uhp(const MinVector& p);
KleinPoint to_klein(const MinVector& p);

// Future light-like vector of a boundary point, normalized so that the
// associated quadratic polynomial is (z - r)^2 (or the constant 1 at
// infinity).
MinVector boundary_light_vector(double r);
// Inverse of boundary_light_vector up to positive scale.
double boundary_point(const MinVector& light);

double hyperbolic_distance(const MinVector& u, const MinVector& v);
double uhp_distance(const UhpPoint& u, const UhpPoint& v);
double klein_distance(const KleinPoint& u, const KleinPoint& v);

// A complete geodesic of the upper half-plane.
class Geodesic {
 public:
  // Endpoints in any order; at most one may be infinite.
  static Geodesic through(double p, double q);
  static Geodesic semicircle(double center, double radius);
  static Geodesic vertical(double foot);
  // Geodesic dual to a spacelike vector.
  static Geodesic from_vector(const MinVector& s);

  bool is_vertical() const { return is_infinite(right_); }
  // For a vertical geodesic left() is the foot and right() is infinity.
  double left() const { return left_; }
  double right() const { return right_; }
  double center() const;
  double radius() const;
  double foot() const;

  // Unit spacelike normal; pairs positively with boundary points under the
  // semicircle and with points left of a vertical line.
  MinVector vector() const;

  // Euclidean unit tangent at a point of the geodesic.
  UhpPoint tangent_at(const UhpPoint& z) const;

 private:
  Geodesic(double l, double r) : left_(l), right_(r) {}
  double left_, right_;
};

// Distance from a hyperboloid point to the geodesic plane of s, signed by
// the side.
double signed_offset(const MinVector& p, const Geodesic& g);
bool on_geodesic(const MinVector& p, const Geodesic& g, double tol = 1e-9);

// Nearest point of g to a timelike point, or to the horoball family of a
// light-like vector.
MinVector project_to_geodesic(const MinVector& p, const Geodesic& g);

// Point where two crossing geodesics meet, if any.
std::optional<MinVector> intersection(const Geodesic& g1, const Geodesic& g2);

// Unsigned angle in [0, pi/2] between two geodesics at a common point,
// measured with Euclidean tangents in the upper half-plane.
double intersection_angle(const Geodesic& g1, const Geodesic& g2,
                          const UhpPoint& z);

// Throws kNoCommonPerpendicular unless the closures are disjoint.
Geodesic common_perpendicular(const Geodesic& g1, const Geodesic& g2);

// ((c-a)(d-b)) / ((b-a)(d-c)); an infinite entry drops both factors that
// contain it.
double cross_ratio(double a, double b, double c, double d);

// Half the log of the cross ratio of the chord through u and v.
double hilbert_distance(const KleinPoint& u, const KleinPoint& v);

struct CenterLemmaReport {
  double x[3];
  double y[3];
  double ratio_residual;
  bool ordered;
};

// The three geodesics must be pairwise disjoint semicircles with no one
// separating the other two; asymptotic pairs are allowed.
CenterLemmaReport verify_center_lemmas(const Geodesic& g1, const Geodesic& g2,
                                       const Geodesic& g3);

}  // namespace stripcomplex
