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

#include <array>

namespace stripcomplex {

// Absolute tolerance for causal and incidence predicates.
constexpr double kEpsClass = 1e-9;

// A point of Minkowski space R^{2,1} with quadratic form x^2 + y^2 - z^2.
struct MinVector {
  double x = 0, y = 0, z = 0;

  MinVector operator+(const MinVector& o) const {
    return {x + o.x, y + o.y, z + o.z};
  }
  MinVector operator-(const MinVector& o) const {
    return {x - o.x, y - o.y, z - o.z};
  }
  MinVector operator-() const { return {-x, -y, -z}; }
  MinVector operator*(double s) const { return {x * s, y * s, z * s}; }
  MinVector operator/(double s) const { return {x / s, y / s, z / s}; }
  bool operator==(const MinVector&) const = default;
};

inline MinVector operator*(double s, const MinVector& v) { return v * s; }

enum class CausalClass { kSpacelike, kLightlike, kTimelike };

double min_inner(const MinVector& u, const MinVector& v);
double min_norm2(const MinVector& v);
MinVector min_cross(const MinVector& u, const MinVector& v);
double euclid_norm(const MinVector& v);

// The vector is scaled to unit Euclidean norm before the sign test.
CausalClass classify(const MinVector& v, double eps = kEpsClass);
// Sign of z for causal vectors: true when future pointing.
bool is_future(const MinVector& v);

// Rescales a timelike vector onto the upper sheet of the hyperboloid.
MinVector normalize_timelike(const MinVector& v);
// Rescales a spacelike vector to unit Minkowski norm.
MinVector normalize_spacelike(const MinVector& v);

// Projective objects, stored with unit Euclidean norm and first nonzero
// coordinate positive.
struct ProjPoint {
  std::array<double, 3> h{};
};
struct ProjLine {
  // Covector: the line is {p : c[0]*p.x + c[1]*p.y + c[2]*p.z = 0}.
  std::array<double, 3> c{};
};

ProjPoint make_point(double x, double y, double z);
ProjLine make_line(double a, double b, double c);
// Line through two affine points of the chart z = 1.
ProjLine line_through(double x1, double y1, double x2, double y2);
MinVector to_min_vector(const ProjPoint& p);

ProjLine dual(const ProjPoint& p);
ProjPoint dual(const ProjLine& l);
double incidence(const ProjPoint& p, const ProjLine& l);
bool projectively_equal(const ProjPoint& a, const ProjPoint& b,
                        double tol = 1e-12);
bool projectively_equal(const ProjLine& a, const ProjLine& b,
                        double tol = 1e-12);

// A line at infinity of the Klein chart is the covector (0,0,1).
ProjLine line_at_infinity();

// Segment with endpoints in the closed unit disk of the chart z = 1.
struct ChordSegment {
  double ax, ay, bx, by;
};

// True iff the line l, which meets the open disk, misses the segment. The
// test is the dual criterion: dual(l) is spacelike and lies strictly inside
// the bigon cut out by the dual lines of the segment endpoints.
bool chords_disjoint(const ChordSegment& seg, const ProjLine& l);

}  // namespace stripcomplex
