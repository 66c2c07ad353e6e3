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
#include "stripcomplex/lorentz.h"

#include <cmath>

#include "stripcomplex/error.h"

namespace stripcomplex {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "invalid-input";
    case ErrorCode::kNoCommonPerpendicular: return "no-common-perpendicular";
    case ErrorCode::kOrderingViolation: return "ordering-violation";
    case ErrorCode::kDecorationOverlap: return "decoration-overlap";
    case ErrorCode::kWrongArity: return "wrong-arity";
    case ErrorCode::kKindMismatch: return "kind-mismatch";
    case ErrorCode::kResourceGuard: return "resource-guard";
    case ErrorCode::kUnsupported: return "unsupported-operation";
    case ErrorCode::kDegenerate: return "degenerate-configuration";
    case ErrorCode::kDomain: return "domain-error";
    case ErrorCode::kWrongCodimension: return "wrong-codimension";
    case ErrorCode::kRankDeficient: return "rank-deficient";
  }
  return "unknown";
}

double min_inner(const MinVector& u, const MinVector& v) {
  return u.x * v.x + u.y * v.y - u.z * v.z;
}

double min_norm2(const MinVector& v) { return min_inner(v, v); }

MinVector min_cross(const MinVector& u, const MinVector& v) {
  return {-u.y * v.z + u.z * v.y, -u.z * v.x + u.x * v.z,
          u.x * v.y - u.y * v.x};
}

double euclid_norm(const MinVector& v) {
  return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
}

CausalClass classify(const MinVector& v, double eps) {
  const double s = euclid_norm(v);
  if (s == 0) return CausalClass::kLightlike;
  const double q = min_norm2(v / s);
  if (q > eps) return CausalClass::kSpacelike;
  if (q < -eps) return CausalClass::kTimelike;
  return CausalClass::kLightlike;
}

bool is_future(const MinVector& v) { return v.z > 0; }

MinVector normalize_timelike(const MinVector& v) {
  const double q = min_norm2(v);
  if (!(q < 0)) throw Error(ErrorCode::kInvalidInput, "vector not timelike");
  MinVector r = v / std::sqrt(-q);
  return r.z < 0 ? -r : r;
}

MinVector normalize_spacelike(const MinVector& v) {
  const double q = min_norm2(v);
  if (!(q > 0)) throw Error(ErrorCode::kInvalidInput, "vector not spacelike");
  return v / std::sqrt(q);
}

namespace {

std::array<double, 3> canonical(double a, double b, double c) {
  const double s = std::sqrt(a * a + b * b + c * c);
  if (!(s > 0) || !std::isfinite(s))
    throw Error(ErrorCode::kInvalidInput, "zero homogeneous vector");
  std::array<double, 3> r{a / s, b / s, c / s};
  for (double t : r) {
    if (t == 0) continue;
    if (t < 0)
      for (double& u : r) u = -u;
    break;
  }
  return r;
}

bool close3(const std::array<double, 3>& a, const std::array<double, 3>& b,
            double tol) {
  double plus = 0, minus = 0;
  for (int i = 0; i < 3; ++i) {
    plus = std::max(plus, std::abs(a[i] - b[i]));
    minus = std::max(minus, std::abs(a[i] + b[i]));
  }
  return std::min(plus, minus) <= tol;
}

}  // namespace

ProjPoint make_point(double x, double y, double z) {
  return {canonical(x, y, z)};
}

ProjLine make_line(double a, double b, double c) {
  return {canonical(a, b, c)};
}

ProjLine line_through(double x1, double y1, double x2, double y2) {
  // Euclidean cross product of (x1,y1,1) and (x2,y2,1).
  return make_line(y1 - y2, x2 - x1, x1 * y2 - x2 * y1);
}

MinVector to_min_vector(const ProjPoint& p) {
  return {p.h[0], p.h[1], p.h[2]};
}

// Minkowski orthogonal complement: <p, q> = p.x q.x + p.y q.y - p.z q.z, so
// the covector of the dual line of p is (p.x, p.y, -p.z).
ProjLine dual(const ProjPoint& p) {
  return make_line(p.h[0], p.h[1], -p.h[2]);
}

ProjPoint dual(const ProjLine& l) {
  return make_point(l.c[0], l.c[1], -l.c[2]);
}

double incidence(const ProjPoint& p, const ProjLine& l) {
  return p.h[0] * l.c[0] + p.h[1] * l.c[1] + p.h[2] * l.c[2];
}

bool projectively_equal(const ProjPoint& a, const ProjPoint& b, double tol) {
  return close3(a.h, b.h, tol);
}

bool projectively_equal(const ProjLine& a, const ProjLine& b, double tol) {
  return close3(a.c, b.c, tol);
}

ProjLine line_at_infinity() { return make_line(0, 0, 1); }

bool chords_disjoint(const ChordSegment& seg, const ProjLine& l) {
  const double ra = seg.ax * seg.ax + seg.ay * seg.ay;
  const double rb = seg.bx * seg.bx + seg.by * seg.by;
  if (ra > 1 + kEpsClass || rb > 1 + kEpsClass)
    throw Error(ErrorCode::kInvalidInput, "segment leaves the closed disk");
  const ProjPoint y = dual(l);
  const MinVector yv = to_min_vector(y);
  // l meets the open disk iff its dual is spacelike.
  if (classify(yv) != CausalClass::kSpacelike)
    throw Error(ErrorCode::kInvalidInput, "line misses the open disk");
  const MinVector a{seg.ax, seg.ay, 1}, b{seg.bx, seg.by, 1};
  // <Y, A> is the line function of l evaluated at A.
  return min_inner(yv, a) * min_inner(yv, b) > 0;
}

}  // namespace stripcomplex
