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

#include <string>
#include <string_view>
#include <vector>

#include "stripcomplex/decorations.h"
#include "stripcomplex/models.h"

namespace stripcomplex {

enum class Kind { kIdeal, kPunctured, kDecorated, kDecoratedPunctured };

const char* kind_name(Kind kind);
// Accepts "ideal", "punctured", "decorated", "decorated-punctured".
Kind parse_kind(std::string_view name);
inline bool is_punctured(Kind k) {
  return k == Kind::kPunctured || k == Kind::kDecoratedPunctured;
}
inline bool is_decorated(Kind k) {
  return k == Kind::kDecorated || k == Kind::kDecoratedPunctured;
}
int min_vertices(Kind kind);
// Dimension of the deformation space: n-3, n-1, 2n-3, 2n-1.
int tangent_dimension(Kind kind, int n);
// Number of vertex coordinates that are not pinned by the normalization.
int free_vertex_count(Kind kind, int n);

constexpr int kDefaultKmax = 3;

// Vertices are indexed from 0. Ideal and decorated kinds use x[0] = inf,
// x[1] = 0, x[2] = 1 < x[3] < ... ; punctured kinds use 0 = x[0] < ... < 1
// with holonomy z -> z + 1. A lifted label L refers to the vertex
// x[L mod n] + floor(L / n) in punctured kinds and x[L mod n] otherwise.
struct PolygonMetric {
  Kind kind = Kind::kIdeal;
  int n = 0;
  std::vector<double> x;
  // One size per vertex for decorated kinds, empty otherwise.
  std::vector<double> sizes;

  int dimension() const { return tangent_dimension(kind, n); }
  double lift(long label) const;
  // Horoball at a lifted label. Undecorated kinds get unit auxiliary
  // horoballs.
  Horoball horoball(long label) const;
  UhpHoroball uhp_horoball(long label) const;
  // Free coordinates: free vertices in index order, then all log sizes.
  std::vector<double> coordinates() const;
};

// Rebuilds a metric from free vertex coordinates and sizes, validating it.
PolygonMetric make_metric(Kind kind, int n,
                          const std::vector<double>& free_vertices,
                          const std::vector<double>& sizes = {},
                          int kmax = kDefaultKmax);
PolygonMetric metric_from_coordinates(Kind kind, int n,
                                      const std::vector<double>& coords,
                                      int kmax = kDefaultKmax);
// Throws kOrderingViolation, kDecorationOverlap or kWrongArity.
void validate_metric(const PolygonMetric& m, int kmax = kDefaultKmax);

// Components follow coordinates(): vertex velocities, then d(log size).
struct TangentVector {
  Kind kind = Kind::kIdeal;
  int n = 0;
  std::vector<double> d;

  TangentVector operator+(const TangentVector& o) const;
  TangentVector operator*(double s) const;
  double norm() const;
};

TangentVector zero_tangent(Kind kind, int n);

// Geodesic class joining vertex i to the lift of vertex j by k turns of the
// holonomy. Canonical form: i < j, or i == j with k > 0; k == 0 for
// non-punctured kinds.
struct Connection {
  int i = 0, j = 0, k = 0;
  bool operator==(const Connection&) const = default;
};

std::vector<Connection> connections(Kind kind, int n, int kmax = kDefaultKmax);
Connection canonical_connection(Kind kind, int n, Connection c);

// Throws kInvalidInput for invalid pairs or windings beyond kmax.
Geodesic connection_geodesic(const PolygonMetric& m, const Connection& c,
                             int kmax = kDefaultKmax);
// Decorated kinds only; throws kKindMismatch otherwise.
double connection_length(const PolygonMetric& m, const Connection& c);
// First-order change of the connection length along v. Undecorated kinds use
// the unit auxiliary horoballs, which do not move.
double length_derivative(const PolygonMetric& m, const TangentVector& v,
                         const Connection& c);
// dl_c(v) > 0 for all connections of winding at most kmax. Values within
// 1e-12 max(1, |v|) of zero count as zero.
bool admissible(const PolygonMetric& m, const TangentVector& v,
                int kmax = kDefaultKmax);

// Coordinates shifted by the holonomy: the vertex set is rotated by one step
// and translated so that x[0] stays at 0. Punctured kinds only.
PolygonMetric rotate_punctured(const PolygonMetric& m);

}  // namespace stripcomplex
