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
#include "stripcomplex/strips.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <set>

#include "stripcomplex/error.h"

namespace stripcomplex {

const char* waist_mode_name(WaistMode mode) {
  return mode == WaistMode::kIntrinsic ? "intrinsic" : "foot-of-infinity";
}

WaistMode parse_waist_mode(std::string_view name) {
  if (name == "intrinsic") return WaistMode::kIntrinsic;
  if (name == "foot-of-infinity" || name == "foot") return WaistMode::kFoot;
  throw Error(ErrorCode::kInvalidInput,
              "unknown template '" + std::string(name) + "'");
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long mod(long a, long b) { return a - floor_div(a, b) * b; }

// Boundary object at a position of P_m.
struct Side {
  bool vertex = false;
  long l1 = 0, l2 = 0;  // edge labels, or l1 = vertex label
};

Side side_at(Kind kind, long p) {
  if (!is_decorated(kind)) return {false, p, p + 1};
  if (p & 1) return {true, (p + 1) / 2, 0};
  return {false, p / 2, p / 2 + 1};
}

Geodesic edge_geodesic(const PolygonMetric& m, const Side& s) {
  return Geodesic::through(m.lift(s.l1), m.lift(s.l2));
}

// Vertex label at an odd position, the position of a vertex label.
long vertex_position(long label) { return 2 * label - 1; }

void check_arc(const PolygonMetric& m, const ArcClass& a) {
  const long mm = period(m.kind, m.n);
  const long d = a.v - a.u;
  bool ok = d >= 2 && !(is_vertex_position(m.kind, a.u) &&
                        is_vertex_position(m.kind, a.v));
  if (is_punctured(m.kind)) {
    ok = ok && d <= mm;
  } else {
    ok = ok && a.u >= 0 && a.v < mm && !(a.u == 0 && a.v == mm - 1);
  }
  if (!ok) throw Error(ErrorCode::kInvalidInput, "arc is not permitted");
}

// Point of the geodesic from the base of h to the boundary point with light
// vector other, lying on the horocycle of h.
MinVector horocycle_point(const Horoball& h, const MinVector& other) {
  return h.v / 2 - other / min_inner(other, h.v);
}

// The other ideal endpoint of a geodesic through the base of h.
MinVector far_end(const Geodesic& g, const Horoball& h) {
  const MinVector l = boundary_light_vector(g.left());
  const MinVector r = boundary_light_vector(g.right());
  const double pl = std::abs(min_inner(l, h.v)) / euclid_norm(l);
  const double pr = std::abs(min_inner(r, h.v)) / euclid_norm(r);
  return pl > pr ? l : r;
}

// Foot of the projection of lv onto the segment [q0, q1].
MinVector clamped_projection(const MinVector& lv, const MinVector& q0,
                             const MinVector& q1, const MinVector& s) {
  const MinVector p = normalize_timelike(lv - min_inner(lv, s) * s);
  const double ch = -min_inner(q0, q1);
  const double len = std::acosh(std::max(1.0, ch));
  if (len < 1e-14) return q0;
  const MinVector tan = (q1 - ch * q0) / std::sinh(len);
  const double t = std::clamp(std::asinh(min_inner(p, tan)), 0.0, len);
  return std::cosh(t) * q0 + std::sinh(t) * tan;
}

KillingField translate_field(const KillingField& k, double shift) {
  // K(z - shift).
  return {k.a, k.b - 2 * k.a * shift, k.c - k.b * shift + k.a * shift * shift};
}

}  // namespace

RealizedArc realize_arc(const PolygonMetric& m, const ArcClass& a,
                        const StripTemplate& t) {
  check_arc(m, a);
  RealizedArc r;
  r.arc = a;
  const Side s1 = side_at(m.kind, a.u), s2 = side_at(m.kind, a.v);
  const bool punct = is_punctured(m.kind);
  MinVector s;
  double factor = 1;
  if (s1.vertex || s2.vertex) {
    r.type = StripType::kParabolic;
    const Side& sv = s1.vertex ? s1 : s2;
    const Side& se = s1.vertex ? s2 : s1;
    r.vertex_label = sv.l1;
    r.horoball = m.horoball(sv.l1);
    const MinVector se_vec = edge_geodesic(m, se).vector();
    s = normalize_spacelike(min_cross(r.horoball.v, se_vec));
    r.carrier = Geodesic::from_vector(s);
    s = r.carrier.vector();
    r.ends[0] = r.horoball.v;
    r.ends[1] = normalize_timelike(min_cross(s, se_vec));
    r.waist = horocycle_point(r.horoball, far_end(r.carrier, r.horoball));
    factor = -min_inner(r.ends[1], r.horoball.v);
  } else {
    const Geodesic e1 = edge_geodesic(m, s1), e2 = edge_geodesic(m, s2);
    const bool foot = t.mode == WaistMode::kFoot;
    double xi = t.xi;
    if (punct && !is_infinite(xi))
      xi += static_cast<double>(floor_div(a.u - t.anchor, period(m.kind, m.n)));
    const MinVector xi_light = boundary_light_vector(xi);
    long shared = 0;
    bool consecutive = false;
    for (long p : {s1.l1, s1.l2})
      for (long q : {s2.l1, s2.l2})
        if (p == q || (!punct && mod(p, m.n) == mod(q, m.n)))
          shared = p, consecutive = true;
    bool placed = false;
    if (consecutive) {
      const Horoball h = m.horoball(shared);
      if (foot && std::abs(min_inner(xi_light, h.v)) >
                      1e-12 * euclid_norm(xi_light) * euclid_norm(h.v)) {
        // Perpendicular to the geodesic from the shared vertex to xi, at the
        // horocycle or deeper in the spike if it misses an edge there.
        const MinVector sg = normalize_spacelike(min_cross(h.v, xi_light));
        for (int k = 0; k < 64 && !placed; ++k) {
          const MinVector p = horocycle_point(
              Horoball{h.v * std::ldexp(1.0, k)}, xi_light);
          const Geodesic c =
              Geodesic::from_vector(normalize_spacelike(min_cross(p, sg)));
          const auto p0 = intersection(e1, c);
          const auto p1 = intersection(e2, c);
          if (p0 && p1) {
            r.carrier = c;
            r.ends[0] = *p0;
            r.ends[1] = *p1;
            placed = true;
          }
        }
      }
    }
    if (consecutive && !placed) {
      // Chord through the points where the horocycle of the shared vertex
      // meets the two edges.
      const Horoball h = m.horoball(shared);
      auto other = [&](const Side& sd) {
        const long o = (sd.l1 == shared ||
                        (!punct && mod(sd.l1, m.n) == mod(shared, m.n)))
                           ? sd.l2
                           : sd.l1;
        return boundary_light_vector(m.lift(o));
      };
      r.ends[0] = horocycle_point(h, other(s1));
      r.ends[1] = horocycle_point(h, other(s2));
      r.carrier = Geodesic::from_vector(
          normalize_spacelike(min_cross(r.ends[0], r.ends[1])));
    } else if (!consecutive) {
      r.carrier = common_perpendicular(e1, e2);
      const auto p0 = intersection(e1, r.carrier);
      const auto p1 = intersection(e2, r.carrier);
      if (!p0 || !p1)
        throw Error(ErrorCode::kDegenerate, "perpendicular misses an edge");
      r.ends[0] = *p0;
      r.ends[1] = *p1;
    }
    s = r.carrier.vector();
    if (foot) {
      r.waist = clamped_projection(xi_light, r.ends[0],
                                   r.ends[1], s);
    } else {
      r.waist = normalize_timelike(r.ends[0] + r.ends[1]);
    }
    factor = -min_inner(r.ends[0], r.waist) - min_inner(r.ends[1], r.waist);
  }
  if (!(t.scale >= 0)) throw Error(ErrorCode::kInvalidInput, "negative scale");
  r.width = t.widths == WidthRule::kUnit ? t.scale : t.scale / factor;

  if (is_decorated(m.kind)) {
    for (long p = a.u + 1; p < a.v; ++p)
      if (p & 1) r.moving.push_back((p + 1) / 2);
  } else {
    for (long l = a.u + 1; l <= a.v; ++l) r.moving.push_back(l);
  }

  if (r.type == StripType::kParabolic) {
    r.field = from_min_vector(r.horoball.v) * (r.width / 2);
  } else {
    const MinVector axis = normalize_spacelike(min_cross(r.waist, s));
    r.field = from_min_vector(axis) * (r.width / 2);
  }
  if (r.width > 0) {
    const MinVector ref = boundary_light_vector(m.lift(r.moving.front()));
    const double side = min_inner(ref, s);
    if (min_inner(vector_velocity(r.field, r.waist), s) * side < 0)
      r.field = -r.field;
  }
  return r;
}

double strip_width_at(const RealizedArc& r, const MinVector& p) {
  if (!on_geodesic(p, r.carrier, 1e-8))
    throw Error(ErrorCode::kInvalidInput, "point is not on the arc");
  if (r.type == StripType::kParabolic) {
    const double level = -min_inner(p, r.horoball.v);
    if (level > -min_inner(r.ends[1], r.horoball.v) * (1 + 1e-9))
      throw Error(ErrorCode::kInvalidInput, "point is beyond the arc");
    return r.width * level;
  }
  const double d01 = hyperbolic_distance(r.ends[0], r.ends[1]);
  const double d0 = hyperbolic_distance(r.ends[0], p);
  const double d1 = hyperbolic_distance(p, r.ends[1]);
  if (d0 + d1 > d01 + 1e-7 * std::max(1.0, d01))
    throw Error(ErrorCode::kInvalidInput, "point is beyond the arc");
  return r.width * -min_inner(p, r.waist);
}

TangentVector gauge_fix(const PolygonMetric& m, const std::vector<double>& dx,
                        const std::vector<MinVector>& dv,
                        const KillingField& holonomy, GaugeInfo* info) {
  const int n = m.n;
  Eigen::Matrix3d a;
  Eigen::Vector3d rhs;
  if (!is_punctured(m.kind)) {
    // Velocities vanish at infinity (w-chart), 0 and 1.
    a << 1, 0, 0, 0, 0, 1, 1, 1, 1;
    rhs << dx[0], dx[1], dx[2];
  } else {
    // Q - T Q = (0, 2 a, b - a) must cancel the holonomy deformation, and the
    // vertex at 0 stays put.
    const double scale = std::max({1.0, std::abs(holonomy.b), std::abs(holonomy.c)});
    if (std::abs(holonomy.a) > 1e-12 * scale)
      throw Error(ErrorCode::kDegenerate, "holonomy deformation is not parabolic");
    a << 2, 0, 0, -1, 1, 0, 0, 0, 1;
    rhs << holonomy.b, holonomy.c, dx[0];
  }
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(a);
  const double cond = svd.singularValues()(0) / svd.singularValues()(2);
  if (!(cond <= 1e12))
    throw Error(ErrorCode::kDegenerate,
                "gauge system singular, condition " + std::to_string(cond));
  const Eigen::Vector3d sol = a.fullPivLu().solve(rhs);
  const KillingField q{sol(0), sol(1), sol(2)};
  if (info) *info = {q, cond};

  TangentVector out = zero_tangent(m.kind, n);
  const int f0 = is_punctured(m.kind) ? 1 : 3;
  for (int i = f0; i < n; ++i) out.d[i - f0] = dx[i] - q(m.x[i]);
  if (is_decorated(m.kind)) {
    const int nv = free_vertex_count(m.kind, n);
    for (int i = 0; i < n; ++i) {
      const Horoball h = m.horoball(i);
      const MinVector v = dv[i] - vector_velocity(q, h.v);
      double ds;
      if (is_infinite(m.x[i])) {
        ds = (v.x + v.z) / 2;
      } else {
        const double h2 = m.sizes[i] * m.sizes[i];
        ds = -(h2 / 2) * (v.z - v.x);
      }
      out.d[nv + i] = ds / m.sizes[i];
    }
  }
  return out;
}

namespace {

// Raw first-order motion of a strip, expressed at the base lifts.
void raw_motion(const PolygonMetric& m, const RealizedArc& r,
                std::vector<double>& dx, std::vector<MinVector>& dv) {
  dx.assign(m.n, 0.0);
  dv.assign(m.n, MinVector{});
  for (long label : r.moving) {
    const int i = static_cast<int>(mod(label, m.n));
    const double shift = is_punctured(m.kind) ? m.lift(label) - m.x[i] : 0.0;
    // Transport the field back to the base lift, where it acts the same way.
    const KillingField k = translate_field(r.field, -shift);
    dx[i] = boundary_velocity(k, m.x[i]);
    if (is_decorated(m.kind)) dv[i] = horoball_velocity(k, m.horoball(i));
  }
}

}  // namespace

TangentVector infinitesimal_strip(const PolygonMetric& m, const ArcClass& a,
                                  const StripTemplate& t) {
  const RealizedArc r = realize_arc(m, a, t);
  std::vector<double> dx;
  std::vector<MinVector> dv;
  raw_motion(m, r, dx, dv);
  // The punctured tile is T-invariant and carries the zero field, so the
  // holonomy is not deformed.
  return gauge_fix(m, dx, dv, KillingField{});
}

PolygonMetric finite_strip_signed(const PolygonMetric& m, const ArcClass& a,
                                  const StripTemplate& t, double width) {
  if (is_punctured(m.kind))
    throw Error(ErrorCode::kUnsupported,
                "finite strips would break the cusp of a punctured polygon");
  const RealizedArc r = realize_arc(m, a, t);
  const Eigen::Matrix2d g = flow(r.field, width);
  std::vector<double> x = m.x;
  std::vector<double> sizes = m.sizes;
  for (long label : r.moving) {
    const int i = static_cast<int>(mod(label, m.n));
    x[i] = mobius(g, m.x[i]);
    if (!sizes.empty()) {
      const UhpHoroball h = horoball_to_uhp({act(g, m.horoball(i).v)});
      sizes[i] = h.size;
    }
  }
  const double x1 = x[1], s = x[2] - x[1];
  if (!(s > 0)) throw Error(ErrorCode::kDegenerate, "strip reversed the polygon");
  std::vector<double> free;
  for (int i = 3; i < m.n; ++i) free.push_back((x[i] - x1) / s);
  for (double& h : sizes) h /= s;
  return make_metric(m.kind, m.n, free, sizes);
}

PolygonMetric finite_strip(const PolygonMetric& m, const ArcClass& a,
                           const StripTemplate& t, double width) {
  if (!(width > 0)) throw Error(ErrorCode::kInvalidInput, "width must be > 0");
  return finite_strip_signed(m, a, t, width);
}

BarycentricPoint barycenter(const std::vector<ArcClass>& arcs) {
  BarycentricPoint x;
  x.arcs = arcs;
  x.weights.assign(arcs.size(), arcs.empty() ? 0.0 : 1.0 / arcs.size());
  return x;
}

namespace {

void check_point(const BarycentricPoint& x) {
  if (x.arcs.empty() || x.arcs.size() != x.weights.size())
    throw Error(ErrorCode::kInvalidInput, "malformed barycentric point");
  double sum = 0;
  for (double w : x.weights) {
    if (!(w > 0)) throw Error(ErrorCode::kInvalidInput, "weights must be > 0");
    sum += w;
  }
  if (std::abs(sum - 1) > 1e-9)
    throw Error(ErrorCode::kInvalidInput, "weights must sum to 1");
}

bool label_inside(Kind kind, long label, long u, long v) {
  if (!is_decorated(kind)) return u + 1 <= label && label <= v;
  const long p = vertex_position(label);
  return u < p && p < v;
}

// Lift range of an arc that can separate labels in [lo, hi].
void lift_range(const PolygonMetric& m, const ArcClass& a, long lo, long hi,
                long& jlo, long& jhi) {
  if (!is_punctured(m.kind)) {
    jlo = jhi = 0;
    return;
  }
  const long mm = period(m.kind, m.n);
  jlo = floor_div(2 * lo - 1 - a.v, mm) - 1;
  jhi = floor_div(2 * hi + 1 - a.u, mm) + 1;
}

bool crosses_lift(const PolygonMetric& m, const ArcClass& a, long shift,
                  long l1, long l2) {
  const long u = a.u + shift, v = a.v + shift;
  if (!is_punctured(m.kind)) {
    // Labels live on the cycle; vertex 0 of a decorated polygon sits at the
    // last position.
    auto inside = [&](long l) {
      if (is_decorated(m.kind)) {
        const long p = mod(vertex_position(l), 2 * m.n);
        return u < p && p < v;
      }
      return label_inside(m.kind, l, u, v);
    };
    if (is_vertex_position(m.kind, u) || is_vertex_position(m.kind, v)) {
      const long pv = is_vertex_position(m.kind, u) ? u : v;
      for (long l : {l1, l2})
        if (mod(vertex_position(l), 2 * m.n) == pv) return false;
    }
    return inside(l1) != inside(l2);
  }
  if (is_vertex_position(m.kind, u) || is_vertex_position(m.kind, v)) {
    const long pv = is_vertex_position(m.kind, u) ? u : v;
    for (long l : {l1, l2})
      if (vertex_position(l) == pv) return false;
  }
  return label_inside(m.kind, l1, u, v) != label_inside(m.kind, l2, u, v);
}

}  // namespace

int crossing_count(const PolygonMetric& m, const ArcClass& a,
                   const Connection& c) {
  const Connection cc = canonical_connection(m.kind, m.n, c);
  const long l1 = cc.i, l2 = cc.j + static_cast<long>(cc.k) * m.n;
  long jlo, jhi;
  lift_range(m, a, std::min(l1, l2), std::max(l1, l2), jlo, jhi);
  const long mm = period(m.kind, m.n);
  int count = 0;
  for (long j = jlo; j <= jhi; ++j) count += crosses_lift(m, a, j * mm, l1, l2);
  return count;
}

double length_derivative_formula(const PolygonMetric& m,
                                 const BarycentricPoint& x, const Connection& c,
                                 const StripTemplate& t) {
  check_point(x);
  const Connection cc = canonical_connection(m.kind, m.n, c);
  const long l1 = cc.i, l2 = cc.j + static_cast<long>(cc.k) * m.n;
  const Geodesic gc = Geodesic::through(m.lift(l1), m.lift(l2));
  const long mm = period(m.kind, m.n);
  double total = 0;
  for (size_t i = 0; i < x.arcs.size(); ++i) {
    const ArcClass& a = x.arcs[i];
    long jlo, jhi;
    lift_range(m, a, std::min(l1, l2), std::max(l1, l2), jlo, jhi);
    for (long j = jlo; j <= jhi; ++j) {
      if (!crosses_lift(m, a, j * mm, l1, l2)) continue;
      const ArcClass lifted{static_cast<int>(a.u + j * mm),
                            static_cast<int>(a.v + j * mm)};
      const RealizedArc r = realize_arc(m, lifted, t);
      auto p = intersection(gc, r.carrier);
      if (!p) throw Error(ErrorCode::kDegenerate, "crossing point not found");
      // When c is the edge an endpoint lies on, that endpoint is the
      // crossing; the intersection itself is too ill-conditioned to test.
      for (long pos : {lifted.u, lifted.v}) {
        const Side sd = side_at(m.kind, pos);
        if (sd.vertex) continue;
        const Geodesic ge = edge_geodesic(m, sd);
        if (ge.left() != gc.left() || ge.right() != gc.right()) continue;
        const MinVector s = gc.vector();
        p = std::abs(min_inner(r.ends[0], s)) < std::abs(min_inner(r.ends[1], s))
                ? r.ends[0]
                : r.ends[1];
      }
      const double angle = intersection_angle(gc, r.carrier, to_uhp(*p));
      total += x.weights[i] * strip_width_at(r, *p) * std::sin(angle);
    }
  }
  return total;
}

TangentVector strip_map(const PolygonMetric& m, const BarycentricPoint& x,
                        const StripTemplate& t, bool pruned) {
  check_point(x);
  for (size_t i = 0; i < x.arcs.size(); ++i)
    for (size_t j = i + 1; j < x.arcs.size(); ++j)
      if (!compatible(m.kind, m.n, x.arcs[i], x.arcs[j]))
        throw Error(ErrorCode::kDomain, "support is not a simplex");
  if (pruned && !is_filling(m.kind, m.n, x.arcs))
    throw Error(ErrorCode::kDomain, "support is not filling");
  TangentVector out = zero_tangent(m.kind, m.n);
  for (size_t i = 0; i < x.arcs.size(); ++i)
    out = out + infinitesimal_strip(m, x.arcs[i], t) * x.weights[i];
  return out;
}

TileMap tile_map(const PolygonMetric& m, const BarycentricPoint& x,
                 const StripTemplate& t) {
  check_point(x);
  ArcComplex ac(m.kind, m.n);
  Simplex s;
  for (const ArcClass& a : x.arcs) s.push_back(ac.index_of(a));
  TileMap tm;
  tm.faces = ac.faces([&] {
    Simplex sorted = s;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
  }());
  const long mm = ac.m();
  for (const Face& f : tm.faces) {
    KillingField k;
    if (!f.punctured) {
      const long lo = *std::min_element(f.corners.begin(), f.corners.end());
      const long hi = *std::max_element(f.corners.begin(), f.corners.end());
      const bool outer = f.top_arc < 0;
      for (size_t i = 0; i < x.arcs.size(); ++i) {
        const ArcClass& a = x.arcs[i];
        long jlo = 0, jhi = 0;
        if (is_punctured(m.kind)) {
          jlo = floor_div(lo - a.v, mm) - 1;
          jhi = floor_div(hi - a.u, mm) + 1;
        }
        for (long j = jlo; j <= jhi; ++j) {
          const long u = a.u + j * mm, v = a.v + j * mm;
          if (outer || lo < u || hi > v) continue;
          const ArcClass lifted{static_cast<int>(u), static_cast<int>(v)};
          k = k + realize_arc(m, lifted, t).field * x.weights[i];
        }
      }
    }
    tm.fields.push_back(k);
  }
  return tm;
}

BasisResult basis_matrix(const PolygonMetric& m,
                         const std::vector<ArcClass>& triangulation,
                         const StripTemplate& t) {
  const int d = m.dimension();
  if (static_cast<int>(triangulation.size()) != d)
    throw Error(ErrorCode::kWrongArity, "triangulation has the wrong size");
  BasisResult r;
  r.matrix.resize(d, d);
  for (int j = 0; j < d; ++j) {
    const TangentVector v = infinitesimal_strip(m, triangulation[j], t);
    for (int i = 0; i < d; ++i) r.matrix(i, j) = v.d[i];
  }
  if (d == 0) {
    r.det = r.normalized_det = r.conditioning = 1;
    return r;
  }
  r.det = r.matrix.determinant();
  Eigen::MatrixXd nm = r.matrix;
  for (int j = 0; j < d; ++j) {
    const double c = nm.col(j).norm();
    if (c > 0) nm.col(j) /= c;
  }
  r.normalized_det = nm.determinant();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(nm);
  const auto& sv = svd.singularValues();
  r.conditioning = sv(0) > 0 ? sv(d - 1) / sv(0) : 0;
  return r;
}

ClosedForm codim1_closed_form(double a, double b, double c, double d, double e,
                              double f, double g, double h) {
  if (!(a < b && b <= c && c < d && d <= e && e < f && f <= g && g < h))
    throw Error(ErrorCode::kInvalidInput, "endpoints are not in order");
  auto centre = [](double a1, double b1, double a2, double b2) {
    return (a2 * b2 - a1 * b1) / (a2 + b2 - a1 - b1);
  };
  ClosedForm r;
  r.x[0] = centre(a, b, e, f);
  r.x[1] = centre(c, d, g, h);
  r.y[0] = centre(a, b, c, d);
  r.y[1] = centre(c, d, e, f);
  r.y[2] = centre(e, f, g, h);
  r.y[3] = centre(a, b, g, h);
  const double x1 = r.x[0], x2 = r.x[1];
  const double y1 = r.y[0], y2 = r.y[1], y3 = r.y[2], y4 = r.y[3];
  r.a[0] = (x1 - y4) / (x1 - y1);
  r.a[1] = ((x1 - y4) * (x2 - y4) - (y4 - y1) * (y4 - y3)) /
           ((x1 - y1) * (x2 - y3));
  r.a[2] = (x2 - y4) / (x2 - y3);
  r.a[3] = 1;
  // Each residual is divided by the size of its terms, so it does not depend
  // on the scale of the chart.
  const double* A = r.a;
  auto rel = [](std::initializer_list<double> terms) {
    double sum = 0, mag = 0;
    for (double t : terms) sum += t, mag += std::abs(t);
    return mag > 0 ? sum / mag : 0.0;
  };
  r.residual[0] = rel({A[0], -A[1], A[2], -A[3]});
  r.residual[1] = rel({A[0] * y1, -A[1] * y2, A[2] * y3, -A[3] * y4});
  r.residual[2] = rel({A[0] * (x1 - y1), -A[3] * (x1 - y4)});
  r.residual[3] = rel({A[2] * (x2 - y3), -A[3] * (x2 - y4)});
  return r;
}

namespace {

struct Flip {
  ArcClass alpha1, alpha2;
  std::vector<ArcClass> shared;
};

Flip split_flip(const PolygonMetric& m, const std::vector<ArcClass>& sigma1,
                const std::vector<ArcClass>& sigma2) {
  const int d = m.dimension();
  if (static_cast<int>(sigma1.size()) != d ||
      static_cast<int>(sigma2.size()) != d)
    throw Error(ErrorCode::kWrongCodimension, "simplices must be top simplices");
  std::set<ArcClass> s1(sigma1.begin(), sigma1.end());
  std::set<ArcClass> s2(sigma2.begin(), sigma2.end());
  Flip f;
  std::vector<ArcClass> only1, only2;
  for (const ArcClass& a : s1) (s2.count(a) ? f.shared : only1).push_back(a);
  for (const ArcClass& a : s2)
    if (!s1.count(a)) only2.push_back(a);
  if (only1.size() != 1 || only2.size() != 1)
    throw Error(ErrorCode::kWrongCodimension,
                "simplices must share all but one arc");
  f.alpha1 = only1[0];
  f.alpha2 = only2[0];
  return f;
}

Eigen::MatrixXd strip_columns(const PolygonMetric& m,
                              const std::vector<ArcClass>& arcs,
                              const StripTemplate& t) {
  Eigen::MatrixXd a(m.dimension(), arcs.size());
  for (size_t j = 0; j < arcs.size(); ++j) {
    const TangentVector v = infinitesimal_strip(m, arcs[j], t);
    for (int i = 0; i < m.dimension(); ++i) a(i, j) = v.d[i];
  }
  return a;
}

}  // namespace

Codim1Result codim1_kernel(const PolygonMetric& m,
                           const std::vector<ArcClass>& sigma1,
                           const std::vector<ArcClass>& sigma2,
                           const StripTemplate& t) {
  const Flip f = split_flip(m, sigma1, sigma2);
  Codim1Result r;
  r.alpha1 = f.alpha1;
  r.alpha2 = f.alpha2;
  r.shared = f.shared;
  std::vector<ArcClass> arcs{f.alpha1, f.alpha2};
  arcs.insert(arcs.end(), f.shared.begin(), f.shared.end());
  Eigen::MatrixXd a = strip_columns(m, arcs, t);
  const int d = m.dimension();
  Eigen::VectorXd norms = a.colwise().norm().transpose();
  for (int j = 0; j < a.cols(); ++j)
    if (norms(j) > 0) a.col(j) /= norms(j);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  r.smallest_singular = sv(d - 1);
  r.gap = sv(0) > 0 ? sv(d - 1) / sv(0) : 0;
  if (!(r.gap > 1e-10))
    throw Error(ErrorCode::kRankDeficient, "strip vectors are rank deficient");
  r.kernel_dimension = 1;
  // Signs are read off the normalized kernel. The strip vectors carry
  // roundoff near 1e-12, amplified by 1 / gap in the kernel.
  Eigen::VectorXd kn = svd.matrixV().col(d);
  kn /= kn.cwiseAbs().maxCoeff();
  if (kn(0) < 0) kn = -kn;
  const double noise = std::max(1e-9, 1e-11 / r.gap);
  r.weak_pattern = kn(0) > noise && kn(1) > noise;
  r.strong_pattern = r.weak_pattern;
  for (int i = 2; i < kn.size(); ++i)
    if (kn(i) > noise) r.strong_pattern = false;
  Eigen::VectorXd k = kn;
  for (int i = 0; i < k.size(); ++i) k(i) /= norms(i) > 0 ? norms(i) : 1.0;
  r.coefficients.resize(k.size());
  const double lead = kn(0) > noise ? k(0) : k.cwiseAbs().maxCoeff();
  for (int i = 0; i < k.size(); ++i) r.coefficients[i] = k(i) / lead;
  return r;
}

namespace {

// A boundary point strictly inside the gap spanned by an edge position.
double gap_point(const PolygonMetric& m, long p) {
  const Side s = side_at(m.kind, p);
  const double x1 = m.lift(s.l1), x2 = m.lift(s.l2);
  if (is_infinite(x1)) return x2 - 1;
  if (is_infinite(x2)) return x1 + 1;
  return (x1 + x2) / 2;
}

// Lift of a2 whose chord interleaves with a1.
ArcClass crossing_lift(const PolygonMetric& m, const ArcClass& a1,
                       const ArcClass& a2) {
  const long mm = period(m.kind, m.n);
  for (long j = -2; j <= 2; ++j) {
    const long u = a2.u + j * mm, v = a2.v + j * mm;
    if ((a1.u < u && u < a1.v && a1.v < v) ||
        (u < a1.u && a1.u < v && v < a1.v))
      return {static_cast<int>(u), static_cast<int>(v)};
  }
  throw Error(ErrorCode::kInvalidInput, "arcs do not cross");
}

// Non-corner edge position for the adapted template, or -1.
long free_edge(const PolygonMetric& m, const ArcClass& a1, const ArcClass& a2) {
  const long mm = period(m.kind, m.n);
  for (long p = 0; p < mm; ++p) {
    if (is_vertex_position(m.kind, p)) continue;
    if (p == a1.u || p == a1.v || p == a2.u || p == a2.v) continue;
    return p;
  }
  return -1;
}

}  // namespace

StripTemplate adapted_template(const PolygonMetric& m, const ArcClass& alpha1,
                               const ArcClass& alpha2, WidthRule widths) {
  StripTemplate t;
  t.mode = WaistMode::kFoot;
  t.widths = widths;
  ArcClass b = alpha2;
  if (is_punctured(m.kind)) {
    b = crossing_lift(m, alpha1, alpha2);
    t.anchor = std::min<long>(alpha1.u, b.u);
  }
  for (const ArcClass& a : {alpha1, b})
    for (long p : {a.u, a.v})
      if (is_vertex_position(m.kind, p)) {
        t.xi = m.lift(side_at(m.kind, p).l1);
        return t;
      }
  if (is_punctured(m.kind)) return t;
  const long e = free_edge(m, alpha1, alpha2);
  if (e >= 0) {
    t.xi = gap_point(m, e);
    return t;
  }
  // Every edge is a corner: use a decorated vertex.
  for (long p = 0; p < period(m.kind, m.n); ++p)
    if (is_vertex_position(m.kind, p)) {
      t.xi = m.lift(side_at(m.kind, p).l1);
      break;
    }
  return t;
}

ClosedFormMatch codim1_match(const PolygonMetric& m,
                             const std::vector<ArcClass>& sigma1,
                             const std::vector<ArcClass>& sigma2) {
  const Flip f = split_flip(m, sigma1, sigma2);
  ClosedFormMatch out;
  const long mm = period(m.kind, m.n);
  const bool punct = is_punctured(m.kind);
  for (const ArcClass& a : {f.alpha1, f.alpha2}) {
    if (is_maximal(m.kind, m.n, a)) return out;
    if (is_vertex_position(m.kind, a.u) || is_vertex_position(m.kind, a.v))
      return out;
  }
  ArcClass b = f.alpha2;
  if (punct) {
    try {
      b = crossing_lift(m, f.alpha1, f.alpha2);
    } catch (const Error&) {
      return out;
    }
  }
  long xi_edge = -1;
  double xi = kInfinity;
  if (!punct) {
    xi_edge = free_edge(m, f.alpha1, f.alpha2);
    if (xi_edge < 0) return out;
    xi = gap_point(m, xi_edge);
  }
  std::vector<long> corners{f.alpha1.u, f.alpha1.v, b.u, b.v};
  auto key = [&](long p) { return punct ? p : mod(p - xi_edge, mm); };
  std::sort(corners.begin(), corners.end(),
            [&](long p, long q) { return key(p) < key(q); });
  // Sides of the flip quadrilateral.
  const long kc[4] = {key(corners[0]), key(corners[1]), key(corners[2]),
                      key(corners[3])};
  const std::pair<int, int> sides[4] = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  std::vector<ArcClass> beta(4);
  std::vector<bool> present(4);
  std::set<ArcClass> seen;
  for (int s = 0; s < 4; ++s) {
    const long p = corners[sides[s].first], q = corners[sides[s].second];
    const long gap = kc[sides[s].second] - kc[sides[s].first];
    present[s] = gap >= 2;
    if (!present[s]) continue;
    if (is_decorated(m.kind) && gap == 2) return out;  // consecutive edges
    long u = std::min(p, q), v = std::max(p, q);
    if (!punct && (u == 0 && v == mm - 1)) present[s] = false;
    if (punct) {
      const long j = floor_div(u, mm);
      u -= j * mm;
      v -= j * mm;
    }
    beta[s] = {static_cast<int>(u), static_cast<int>(v)};
    if (!seen.insert(beta[s]).second) return out;  // repeated lifts
  }
  // Endpoints of the corner edges in the chart sending xi to infinity.
  auto chart = [&](double z) {
    if (is_infinite(xi)) return z;
    if (is_infinite(z)) return 0.0;
    return -1 / (z - xi);
  };
  double ends[8];
  for (int c = 0; c < 4; ++c) {
    const Side s = side_at(m.kind, corners[c]);
    const double p = chart(m.lift(s.l1)), q = chart(m.lift(s.l2));
    ends[2 * c] = std::min(p, q);
    ends[2 * c + 1] = std::max(p, q);
  }
  ClosedForm cf;
  try {
    cf = codim1_closed_form(ends[0], ends[1], ends[2], ends[3], ends[4],
                            ends[5], ends[6], ends[7]);
  } catch (const Error&) {
    return out;
  }
  out.applicable = true;
  for (double r : cf.residual)
    out.system_residual = std::max(out.system_residual, std::abs(r));

  StripTemplate t;
  t.mode = WaistMode::kFoot;
  t.xi = xi;
  t.widths = WidthRule::kUnit;
  const Codim1Result k = codim1_kernel(m, sigma1, sigma2, t);
  // Coefficients: the diagonal through corners 0 and 2, the one through 1 and
  // 3, then the sides.
  auto canon = [&](long u, long v) {
    if (u > v) std::swap(u, v);
    if (punct) {
      const long j = floor_div(u, mm);
      u -= j * mm;
      v -= j * mm;
    }
    return ArcClass{static_cast<int>(u), static_cast<int>(v)};
  };
  const ArcClass diag02 = canon(corners[0], corners[2]);
  std::vector<ArcClass> arcs{k.alpha1, k.alpha2};
  arcs.insert(arcs.end(), k.shared.begin(), k.shared.end());
  out.predicted.assign(arcs.size(), 0.0);
  for (size_t i = 0; i < arcs.size(); ++i) {
    if (i < 2) {
      out.predicted[i] =
          arcs[i] == diag02 ? cf.a[3] - cf.a[0] : cf.a[3] - cf.a[2];
      continue;
    }
    for (int s = 0; s < 4; ++s)
      if (present[s] && arcs[i] == beta[s])
        out.predicted[i] = s == 3 ? -cf.a[3] : cf.a[s];
  }
  const double p0 = out.predicted[0];
  double scale = 0;
  for (double p : out.predicted) scale = std::max(scale, std::abs(p));
  for (size_t i = 0; i < arcs.size(); ++i)
    out.kernel_error =
        std::max(out.kernel_error,
                 std::abs(k.coefficients[i] * p0 - out.predicted[i]) / scale);
  return out;
}

LinkDegree link_degree(const PolygonMetric& m, const std::vector<ArcClass>& s,
                       const StripTemplate& t) {
  const int d = m.dimension();
  if (static_cast<int>(s.size()) != d - 2)
    throw Error(ErrorCode::kWrongCodimension, "simplex must have codimension 2");
  ArcComplex ac(m.kind, m.n);
  Simplex idx;
  for (const ArcClass& a : s) idx.push_back(ac.index_of(a));
  std::sort(idx.begin(), idx.end());
  if (!ac.is_simplex(idx))
    throw Error(ErrorCode::kInvalidInput, "arcs are not pairwise compatible");
  const std::vector<int> link = ac.link_vertices(idx).members();
  if (link.size() < 3)
    throw Error(ErrorCode::kDegenerate, "link is not a cycle");
  // Walk the cycle.
  std::vector<int> cycle{link[0]};
  std::vector<bool> used(link.size(), false);
  used[0] = true;
  for (size_t step = 1; step < link.size(); ++step) {
    int next = -1;
    for (size_t i = 0; i < link.size(); ++i)
      if (!used[i] && ac.compatible(cycle.back(), link[i])) {
        next = static_cast<int>(i);
        break;
      }
    if (next < 0) throw Error(ErrorCode::kDegenerate, "link is not a cycle");
    used[next] = true;
    cycle.push_back(link[next]);
  }
  for (size_t i = 0; i < cycle.size(); ++i) {
    int deg = 0;
    for (int o : link) deg += o != cycle[i] && ac.compatible(cycle[i], o);
    if (deg != 2) throw Error(ErrorCode::kDegenerate, "link is not a cycle");
  }
  if (!ac.compatible(cycle.front(), cycle.back()))
    throw Error(ErrorCode::kDegenerate, "link is not a cycle");

  Eigen::MatrixXd comp;
  if (s.empty()) {
    comp = Eigen::MatrixXd::Identity(d, 2);
  } else {
    const Eigen::MatrixXd b = strip_columns(m, s, t);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(b, Eigen::ComputeFullU);
    comp = svd.matrixU().rightCols(2);
  }
  LinkDegree r;
  r.cycle_length = static_cast<int>(cycle.size());
  std::vector<Eigen::Vector2d> proj;
  for (int a : cycle) {
    r.cycle.push_back(ac.arcs()[a]);
    const TangentVector v = infinitesimal_strip(m, ac.arcs()[a], t);
    Eigen::VectorXd f(d);
    for (int i = 0; i < d; ++i) f(i) = v.d[i];
    proj.push_back(comp.transpose() * f);
  }
  int pos = 0, neg = 0;
  for (size_t i = 0; i < proj.size(); ++i) {
    const Eigen::Vector2d& p = proj[i];
    const Eigen::Vector2d& q = proj[(i + 1) % proj.size()];
    const double th = std::atan2(p(0) * q(1) - p(1) * q(0), p.dot(q));
    r.angle_sum += th;
    (th > 0 ? pos : neg)++;
  }
  r.same_sign = pos == 0 || neg == 0;
  return r;
}

}  // namespace stripcomplex
