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
#include "stripcomplex/models.h"

#include <algorithm>
#include <cmath>

#include "stripcomplex/error.h"

namespace stripcomplex {

namespace {

// Quadratic a z^2 + b z + c <-> Minkowski vector.
MinVector from_quadratic(double a, double b, double c) {
  return {(c - a) / 2, b / 2, (c + a) / 2};
}

void to_quadratic(const MinVector& v, double& a, double& b, double& c) {
  a = v.z - v.x;
  b = 2 * v.y;
  c = v.x + v.z;
}

void check_hyperboloid(const MinVector& p) {
  const double q = min_norm2(p);
  if (!std::isfinite(q) || p.z <= 0 ||
      std::abs(q + 1) > 1e-9 * std::max(1.0, p.z * p.z))
    throw Error(ErrorCode::kInvalidInput, "point is not on the hyperboloid");
}

}  // namespace

Model model_of(const ModelPoint& p) {
  switch (p.index()) {
    case 0: return Model::kHyperboloid;
    case 1: return Model::kKlein;
    default: return Model::kUhp;
  }
}

MinVector to_hyperboloid(const UhpPoint& z) {
  if (!(z.im > 0) || !std::isfinite(z.re) || !std::isfinite(z.im))
    throw Error(ErrorCode::kInvalidInput, "point is not in the half-plane");
  const double r2 = z.re * z.re + z.im * z.im;
  return {(r2 - 1) / (2 * z.im), -z.re / z.im, (r2 + 1) / (2 * z.im)};
}

MinVector to_hyperboloid(const KleinPoint& k) {
  const double r2 = k.x * k.x + k.y * k.y;
  if (!(r2 < 1)) throw Error(ErrorCode::kInvalidInput, "point not in disk");
  const double s = 1 / std::sqrt(1 - r2);
  return {k.x * s, k.y * s, s};
}

UhpPoint to_uhp(const MinVector& p) {
  check_hyperboloid(p);
  const double v = 1 / (p.z - p.x);
  return {-p.y * v, v};
}

KleinPoint to_klein(const MinVector& p) {
  check_hyperboloid(p);
  return {p.x / p.z, p.y / p.z};
}

ModelPoint convert(const ModelPoint& p, Model to) {
  MinVector h;
  switch (p.index()) {
    case 0:
      h = std::get<MinVector>(p);
      check_hyperboloid(h);
      break;
    case 1: h = to_hyperboloid(std::get<KleinPoint>(p)); break;
    default: h = to_hyperboloid(std::get<UhpPoint>(p)); break;
  }
  switch (to) {
    case Model::kHyperboloid: return h;
    case Model::kKlein: return to_klein(h);
    case Model::kUhp: return to_uhp(h);
  }
  return h;
}

MinVector boundary_light_vector(double r) {
  if (is_infinite(r)) return from_quadratic(0, 0, 1);
  return from_quadratic(1, -2 * r, r * r);
}

double boundary_point(const MinVector& light) {
  double a, b, c;
  to_quadratic(light, a, b, c);
  if (std::abs(a) <= 1e-14 * euclid_norm(light)) return kInfinity;
  return -b / (2 * a);
}

double hyperbolic_distance(const MinVector& u, const MinVector& v) {
  const double c = -min_inner(u, v);
  if (c > 2) return std::acosh(c);
  // Chordal form, stable for nearby points.
  return 2 * std::asinh(std::sqrt(std::max(0.0, min_norm2(u - v))) / 2);
}

double uhp_distance(const UhpPoint& u, const UhpPoint& v) {
  const double dx = u.re - v.re, dy = u.im - v.im;
  return 2 * std::asinh(std::sqrt(dx * dx + dy * dy) /
                        (2 * std::sqrt(u.im * v.im)));
}

double klein_distance(const KleinPoint& u, const KleinPoint& v) {
  return hilbert_distance(u, v);
}

Geodesic Geodesic::through(double p, double q) {
  if (std::isnan(p) || std::isnan(q) || p == q ||
      (is_infinite(p) && is_infinite(q)))
    throw Error(ErrorCode::kInvalidInput, "degenerate geodesic endpoints");
  if (is_infinite(p)) return Geodesic(q, kInfinity);
  if (is_infinite(q)) return Geodesic(p, kInfinity);
  return Geodesic(std::min(p, q), std::max(p, q));
}

Geodesic Geodesic::semicircle(double center, double radius) {
  if (!(radius > 0)) throw Error(ErrorCode::kInvalidInput, "radius <= 0");
  return Geodesic(center - radius, center + radius);
}

Geodesic Geodesic::vertical(double foot) {
  if (!std::isfinite(foot)) throw Error(ErrorCode::kInvalidInput, "bad foot");
  return Geodesic(foot, kInfinity);
}

Geodesic Geodesic::from_vector(const MinVector& s) {
  if (classify(s) != CausalClass::kSpacelike)
    throw Error(ErrorCode::kInvalidInput, "geodesic vector not spacelike");
  double a, b, c;
  to_quadratic(s, a, b, c);
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (std::abs(a) <= 1e-14 * scale) return Geodesic::vertical(-c / b);
  const double disc = b * b - 4 * a * c;
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double r1 = q / a, r2 = c / q;
  return Geodesic::through(r1, r2);
}

double Geodesic::center() const {
  if (is_vertical()) throw Error(ErrorCode::kInvalidInput, "vertical line");
  return (left_ + right_) / 2;
}

double Geodesic::radius() const {
  if (is_vertical()) throw Error(ErrorCode::kInvalidInput, "vertical line");
  return (right_ - left_) / 2;
}

double Geodesic::foot() const {
  if (!is_vertical()) throw Error(ErrorCode::kInvalidInput, "not vertical");
  return left_;
}

MinVector Geodesic::vector() const {
  if (is_vertical()) return normalize_spacelike(from_quadratic(0, 1, -left_));
  return normalize_spacelike(
      from_quadratic(1, -(left_ + right_), left_ * right_));
}

UhpPoint Geodesic::tangent_at(const UhpPoint& z) const {
  if (is_vertical()) return {0, 1};
  const double tx = -z.im, ty = z.re - center();
  const double s = std::hypot(tx, ty);
  return {tx / s, ty / s};
}

double signed_offset(const MinVector& p, const Geodesic& g) {
  return std::asinh(min_inner(p, g.vector()));
}

bool on_geodesic(const MinVector& p, const Geodesic& g, double tol) {
  return std::abs(min_inner(p, g.vector())) <= tol * std::max(1.0, p.z);
}

MinVector project_to_geodesic(const MinVector& p, const Geodesic& g) {
  const MinVector s = g.vector();
  return normalize_timelike(p - min_inner(p, s) * s);
}

std::optional<MinVector> intersection(const Geodesic& g1, const Geodesic& g2) {
  const MinVector c = min_cross(g1.vector(), g2.vector());
  if (classify(c) != CausalClass::kTimelike) return std::nullopt;
  return normalize_timelike(c);
}

double intersection_angle(const Geodesic& g1, const Geodesic& g2,
                          const UhpPoint& z) {
  const UhpPoint t1 = g1.tangent_at(z), t2 = g2.tangent_at(z);
  const double dot = std::abs(t1.re * t2.re + t1.im * t2.im);
  const double crs = std::abs(t1.re * t2.im - t1.im * t2.re);
  return std::atan2(crs, dot);
}

Geodesic common_perpendicular(const Geodesic& g1, const Geodesic& g2) {
  const double ends1[2] = {g1.left(), g1.right()};
  const double ends2[2] = {g2.left(), g2.right()};
  for (double p : ends1)
    for (double q : ends2)
      if (p == q || (!is_infinite(p) && !is_infinite(q) &&
                     std::abs(p - q) <= 1e-12 * std::max(1.0, std::abs(p))))
        throw Error(ErrorCode::kNoCommonPerpendicular, "asymptotic geodesics");
  const MinVector c = min_cross(g1.vector(), g2.vector());
  if (classify(c) != CausalClass::kSpacelike)
    throw Error(ErrorCode::kNoCommonPerpendicular, "geodesics are not disjoint");
  return Geodesic::from_vector(c);
}

double cross_ratio(double a, double b, double c, double d) {
  const int infs = is_infinite(a) + is_infinite(b) + is_infinite(c) +
                   is_infinite(d);
  if (infs > 1) throw Error(ErrorCode::kInvalidInput, "degenerate quadruple");
  auto f = [](double u, double v) {
    return (is_infinite(u) || is_infinite(v)) ? 1.0 : u - v;
  };
  const double num = f(c, a) * f(d, b);
  const double den = f(b, a) * f(d, c);
  if (den == 0 || !std::isfinite(num))
    throw Error(ErrorCode::kInvalidInput, "degenerate quadruple");
  return num / den;
}

double hilbert_distance(const KleinPoint& u, const KleinPoint& v) {
  if (u.x * u.x + u.y * u.y >= 1 || v.x * v.x + v.y * v.y >= 1)
    throw Error(ErrorCode::kInvalidInput, "point not in disk");
  const double dx = v.x - u.x, dy = v.y - u.y;
  const double A = dx * dx + dy * dy;
  if (A == 0) return 0;
  // |u + t (v - u)|^2 = 1.
  const double B = 2 * (u.x * dx + u.y * dy);
  const double C = u.x * u.x + u.y * u.y - 1;
  const double root = std::sqrt(B * B - 4 * A * C);
  const double tp = (-B - root) / (2 * A), tq = (-B + root) / (2 * A);
  return 0.5 * std::log(cross_ratio(tp, 0, 1, tq));
}

namespace {

double perpendicular_center(double a1, double b1, double a2, double b2) {
  return (a2 * b2 - a1 * b1) / (a2 + b2 - a1 - b1);
}

}  // namespace

CenterLemmaReport verify_center_lemmas(const Geodesic& g1, const Geodesic& g2,
                                       const Geodesic& g3) {
  Geodesic g[3] = {g1, g2, g3};
  for (const Geodesic& h : g)
    if (h.is_vertical())
      throw Error(ErrorCode::kInvalidInput, "geodesics must be semicircles");
  std::sort(g, g + 3, [](const Geodesic& p, const Geodesic& q) {
    return p.left() < q.left();
  });
  const double a = g[0].left(), b = g[0].right(), c = g[1].left(),
               d = g[1].right(), e = g[2].left(), f = g[2].right();
  if (b > c || d > e)
    throw Error(ErrorCode::kInvalidInput, "geodesics overlap or are nested");
  CenterLemmaReport r;
  r.x[0] = (a + b) / 2;
  r.x[1] = (c + d) / 2;
  r.x[2] = (e + f) / 2;
  r.y[0] = perpendicular_center(c, d, e, f);
  r.y[1] = perpendicular_center(a, b, e, f);
  r.y[2] = perpendicular_center(a, b, c, d);
  r.ratio_residual = std::abs((r.x[0] - r.x[1]) / (r.x[1] - r.x[2]) -
                              (r.y[0] - r.y[1]) / (r.y[1] - r.y[2]));
  r.ordered = r.y[2] < r.y[1] && r.y[1] < r.y[0];
  return r;
}

}  // namespace stripcomplex
