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
#include <optional>
#include <vector>

#include "stripcomplex/arccomplex.h"
#include "stripcomplex/killing.h"
#include "stripcomplex/polygons.h"

namespace stripcomplex {

enum class WaistMode { kIntrinsic, kFoot };
enum class WidthRule { kNormalized, kUnit };

const char* waist_mode_name(WaistMode mode);
// Accepts "intrinsic" and "foot-of-infinity".
WaistMode parse_waist_mode(std::string_view name);

struct StripTemplate {
  WaistMode mode = WaistMode::kIntrinsic;
  // Boundary point whose projection gives the waist in foot mode. In
  // punctured kinds xi is used by the lift of each arc starting in
  // [anchor, anchor + period) and translated for the other lifts; the default
  // infinity is the fixed point of the holonomy.
  double xi = kInfinity;
  long anchor = 0;
  // Normalized widths make the boundary widths of each arc sum to scale.
  WidthRule widths = WidthRule::kNormalized;
  double scale = 1;
};

enum class StripType { kHyperbolic, kParabolic };

struct RealizedArc {
  ArcClass arc;
  StripType type = StripType::kHyperbolic;
  Geodesic carrier = Geodesic::vertical(0);
  // Endpoints of the realized segment. For parabolic strips ends[0] is the
  // light-like vector of the decorated vertex.
  MinVector ends[2];
  MinVector waist;
  double width = 1;
  // Decoration of the vertex of a parabolic strip.
  Horoball horoball;
  long vertex_label = 0;
  // Field of the moving side relative to the fixed side.
  KillingField field;
  // Lifted labels of the vertices on the moving side.
  std::vector<long> moving;
};

// a may be any lift of a permitted arc.
RealizedArc realize_arc(const PolygonMetric& m, const ArcClass& a,
                        const StripTemplate& t = {});
// Throws kInvalidInput when p is not on the realized segment.
double strip_width_at(const RealizedArc& r, const MinVector& p);

// Non-punctured kinds only; width > 0.
PolygonMetric finite_strip(const PolygonMetric& m, const ArcClass& a,
                           const StripTemplate& t, double width);
// Same as finite_strip but accepting any real width.
PolygonMetric finite_strip_signed(const PolygonMetric& m, const ArcClass& a,
                                  const StripTemplate& t, double width);

TangentVector infinitesimal_strip(const PolygonMetric& m, const ArcClass& a,
                                  const StripTemplate& t = {});

struct GaugeInfo {
  KillingField q;
  double condition = 1;
};

// Tangent vector of a set of raw first-order motions, after subtracting the
// global field fixed by the normalization. Exposed for tests.
TangentVector gauge_fix(const PolygonMetric& m, const std::vector<double>& dx,
                        const std::vector<MinVector>& dv,
                        const KillingField& holonomy, GaugeInfo* info = nullptr);

struct BarycentricPoint {
  std::vector<ArcClass> arcs;
  std::vector<double> weights;
};

BarycentricPoint barycenter(const std::vector<ArcClass>& arcs);

// Sum over the crossings of c with the support of x of the weighted strip
// width times the sine of the crossing angle. Decorated kinds.
double length_derivative_formula(const PolygonMetric& m,
                                 const BarycentricPoint& x, const Connection& c,
                                 const StripTemplate& t = {});
// Whether the connection crosses the arc, counted over lifts.
int crossing_count(const PolygonMetric& m, const ArcClass& a,
                   const Connection& c);

// With pruned set, throws kDomain unless the support is filling.
TangentVector strip_map(const PolygonMetric& m, const BarycentricPoint& x,
                        const StripTemplate& t = {}, bool pruned = false);

// Fields assigned to the faces of an arc system.
struct TileMap {
  std::vector<Face> faces;
  std::vector<KillingField> fields;
};
TileMap tile_map(const PolygonMetric& m, const BarycentricPoint& x,
                 const StripTemplate& t = {});

struct BasisResult {
  Eigen::MatrixXd matrix;
  double det = 0;
  // Determinant after scaling every column to unit length.
  double normalized_det = 0;
  // Smallest over largest singular value.
  double conditioning = 0;
};

BasisResult basis_matrix(const PolygonMetric& m,
                         const std::vector<ArcClass>& triangulation,
                         const StripTemplate& t = {});

struct ClosedForm {
  double a[4];
  double x[2];
  double y[4];
  // Residuals of the four linear relations, relative to their terms.
  double residual[4];
};

// Endpoints of four boundary geodesics a < b <= c < d <= e < f <= g < h.
ClosedForm codim1_closed_form(double a, double b, double c, double d, double e,
                              double f, double g, double h);

struct Codim1Result {
  ArcClass alpha1, alpha2;
  std::vector<ArcClass> shared;
  // Coefficients of alpha1, alpha2, then shared arcs, scaled so that the
  // alpha1 coefficient is 1.
  std::vector<double> coefficients;
  int kernel_dimension = 0;
  // Singular values of the column-normalized matrix: the smallest nonzero
  // one and its ratio to the largest.
  double smallest_singular = 0;
  double gap = 0;
  // Weak: both exclusive coefficients positive. Strong: also every shared
  // coefficient <= 0. Normalized entries below max(1e-9, 1e-11 / gap) of
  // the largest count as 0.
  bool weak_pattern = false;
  bool strong_pattern = false;
};

// Throws kWrongCodimension unless the simplices share all but one arc, and
// kRankDeficient if the strip vectors span less than the tangent space.
Codim1Result codim1_kernel(const PolygonMetric& m,
                           const std::vector<ArcClass>& sigma1,
                           const std::vector<ArcClass>& sigma2,
                           const StripTemplate& t = {});

// Foot-mode template suited to the flip of alpha1 and alpha2.
StripTemplate adapted_template(const PolygonMetric& m, const ArcClass& alpha1,
                               const ArcClass& alpha2,
                               WidthRule widths = WidthRule::kNormalized);

struct ClosedFormMatch {
  bool applicable = false;
  double system_residual = 0;
  double kernel_error = 0;
  std::vector<double> predicted;
};

// Compares the kernel with the closed-form coefficients under the adapted
// template with unit widths; not applicable to flips involving maximal or
// edge-to-vertex arcs, consecutive-edge sides, or repeated lifts.
ClosedFormMatch codim1_match(const PolygonMetric& m,
                             const std::vector<ArcClass>& sigma1,
                             const std::vector<ArcClass>& sigma2);

struct LinkDegree {
  int cycle_length = 0;
  double angle_sum = 0;
  bool same_sign = false;
  std::vector<ArcClass> cycle;
};

// s must have two arcs fewer than a top simplex.
LinkDegree link_degree(const PolygonMetric& m, const std::vector<ArcClass>& s,
                       const StripTemplate& t = {});

}  // namespace stripcomplex
