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
#include "stripcomplex/polygons.h"

#include <algorithm>
#include <cmath>

#include "stripcomplex/error.h"

namespace stripcomplex {

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::kIdeal: return "ideal";
    case Kind::kPunctured: return "punctured";
    case Kind::kDecorated: return "decorated";
    case Kind::kDecoratedPunctured: return "decorated-punctured";
  }
  return "?";
}

Kind parse_kind(std::string_view name) {
  if (name == "ideal") return Kind::kIdeal;
  if (name == "punctured") return Kind::kPunctured;
  if (name == "decorated") return Kind::kDecorated;
  if (name == "decorated-punctured") return Kind::kDecoratedPunctured;
  throw Error(ErrorCode::kInvalidInput, "unknown kind '" + std::string(name) + "'");
}

int min_vertices(Kind kind) { return is_punctured(kind) ? 2 : 3; }

int tangent_dimension(Kind kind, int n) {
  switch (kind) {
    case Kind::kIdeal: return n - 3;
    case Kind::kPunctured: return n - 1;
    case Kind::kDecorated: return 2 * n - 3;
    case Kind::kDecoratedPunctured: return 2 * n - 1;
  }
  return 0;
}

int free_vertex_count(Kind kind, int n) {
  return is_punctured(kind) ? n - 1 : n - 3;
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long mod(long a, long b) { return a - floor_div(a, b) * b; }

int first_free(Kind kind) { return is_punctured(kind) ? 1 : 3; }

}  // namespace

double PolygonMetric::lift(long label) const {
  const long i = mod(label, n);
  if (!is_punctured(kind)) return x[i];
  return x[i] + static_cast<double>(floor_div(label, n));
}

UhpHoroball PolygonMetric::uhp_horoball(long label) const {
  const double size = sizes.empty() ? 1.0 : sizes[mod(label, n)];
  return {lift(label), size};
}

Horoball PolygonMetric::horoball(long label) const {
  return horoball_from_uhp(uhp_horoball(label));
}

std::vector<double> PolygonMetric::coordinates() const {
  std::vector<double> c(x.begin() + first_free(kind), x.end());
  for (double h : sizes) c.push_back(std::log(h));
  return c;
}

void validate_metric(const PolygonMetric& m, int kmax) {
  if (m.n < min_vertices(m.kind) || static_cast<int>(m.x.size()) != m.n)
    throw Error(ErrorCode::kWrongArity, "wrong number of vertices");
  if (is_decorated(m.kind) != !m.sizes.empty() ||
      (!m.sizes.empty() && static_cast<int>(m.sizes.size()) != m.n))
    throw Error(ErrorCode::kWrongArity, "wrong number of decorations");
  for (double v : m.x)
    if (std::isnan(v)) throw Error(ErrorCode::kInvalidInput, "NaN vertex");
  if (is_punctured(m.kind)) {
    if (m.x[0] != 0)
      throw Error(ErrorCode::kOrderingViolation, "x[0] must be 0");
    for (int i = 1; i < m.n; ++i)
      if (!(m.x[i] > m.x[i - 1]))
        throw Error(ErrorCode::kOrderingViolation, "vertices not increasing");
    if (!(m.x[m.n - 1] < 1))
      throw Error(ErrorCode::kOrderingViolation, "vertex outside [0, 1)");
  } else {
    if (!is_infinite(m.x[0]) || m.x[1] != 0 || m.x[2] != 1)
      throw Error(ErrorCode::kOrderingViolation,
                  "vertices 0, 1, 2 must be inf, 0, 1");
    for (int i = 3; i < m.n; ++i)
      if (!(m.x[i] > m.x[i - 1]) || !std::isfinite(m.x[i]))
        throw Error(ErrorCode::kOrderingViolation, "vertices not increasing");
  }
  if (m.sizes.empty()) return;
  for (double s : m.sizes)
    if (!(s > 0) || !std::isfinite(s))
      throw Error(ErrorCode::kInvalidInput, "decoration size must be > 0");
  const int kk = is_punctured(m.kind) ? kmax : 0;
  for (const Connection& c : connections(m.kind, m.n, kk)) {
    if (connection_length(m, c) < -1e-12)
      throw Error(ErrorCode::kDecorationOverlap,
                  "decorations " + std::to_string(c.i) + " and " +
                      std::to_string(c.j) + " overlap");
  }
}

PolygonMetric make_metric(Kind kind, int n,
                          const std::vector<double>& free_vertices,
                          const std::vector<double>& sizes, int kmax) {
  if (n < min_vertices(kind))
    throw Error(ErrorCode::kWrongArity, "too few vertices");
  if (static_cast<int>(free_vertices.size()) != free_vertex_count(kind, n))
    throw Error(ErrorCode::kWrongArity, "wrong number of free vertices");
  PolygonMetric m;
  m.kind = kind;
  m.n = n;
  if (is_punctured(kind)) {
    m.x.push_back(0);
  } else {
    m.x = {kInfinity, 0, 1};
  }
  m.x.insert(m.x.end(), free_vertices.begin(), free_vertices.end());
  m.sizes = sizes;
  validate_metric(m, kmax);
  return m;
}

PolygonMetric metric_from_coordinates(Kind kind, int n,
                                      const std::vector<double>& coords,
                                      int kmax) {
  if (n < min_vertices(kind) ||
      static_cast<int>(coords.size()) != tangent_dimension(kind, n))
    throw Error(ErrorCode::kWrongArity, "wrong number of coordinates");
  const int nv = free_vertex_count(kind, n);
  std::vector<double> sizes;
  for (auto it = coords.begin() + nv; it != coords.end(); ++it)
    sizes.push_back(std::exp(*it));
  return make_metric(kind, n, {coords.begin(), coords.begin() + nv}, sizes,
                     kmax);
}

TangentVector TangentVector::operator+(const TangentVector& o) const {
  if (o.kind != kind || o.n != n || o.d.size() != d.size())
    throw Error(ErrorCode::kKindMismatch, "tangent vectors do not match");
  TangentVector r = *this;
  for (size_t i = 0; i < d.size(); ++i) r.d[i] += o.d[i];
  return r;
}

TangentVector TangentVector::operator*(double s) const {
  TangentVector r = *this;
  for (double& v : r.d) v *= s;
  return r;
}

double TangentVector::norm() const {
  double s = 0;
  for (double v : d) s += v * v;
  return std::sqrt(s);
}

TangentVector zero_tangent(Kind kind, int n) {
  return {kind, n, std::vector<double>(tangent_dimension(kind, n), 0.0)};
}

std::vector<Connection> connections(Kind kind, int n, int kmax) {
  std::vector<Connection> out;
  if (!is_punctured(kind)) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.push_back({i, j, 0});
    return out;
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 1; k <= kmax; ++k) out.push_back({i, i, k});
    for (int j = i + 1; j < n; ++j)
      for (int k = -kmax; k <= kmax; ++k) out.push_back({i, j, k});
  }
  return out;
}

Connection canonical_connection(Kind kind, int n, Connection c) {
  if (c.i < 0 || c.j < 0 || c.i >= n || c.j >= n)
    throw Error(ErrorCode::kInvalidInput, "vertex index out of range");
  if (!is_punctured(kind)) {
    if (c.k != 0 || c.i == c.j)
      throw Error(ErrorCode::kInvalidInput, "invalid connection");
    if (c.i > c.j) std::swap(c.i, c.j);
    return c;
  }
  if (c.i == c.j && c.k == 0)
    throw Error(ErrorCode::kInvalidInput, "trivial connection");
  if (c.i > c.j || (c.i == c.j && c.k < 0)) c = {c.j, c.i, -c.k};
  return c;
}

Geodesic connection_geodesic(const PolygonMetric& m, const Connection& c,
                             int kmax) {
  const Connection cc = canonical_connection(m.kind, m.n, c);
  if (std::abs(cc.k) > kmax)
    throw Error(ErrorCode::kInvalidInput, "winding beyond cutoff");
  return Geodesic::through(m.lift(cc.i), m.lift(cc.j + static_cast<long>(cc.k) * m.n));
}

double connection_length(const PolygonMetric& m, const Connection& c) {
  if (!is_decorated(m.kind))
    throw Error(ErrorCode::kKindMismatch, "connection length needs decorations");
  const Connection cc = canonical_connection(m.kind, m.n, c);
  return stripcomplex::connection_length(
      m.horoball(cc.i), m.horoball(cc.j + static_cast<long>(cc.k) * m.n));
}

double length_derivative(const PolygonMetric& m, const TangentVector& v,
                         const Connection& c) {
  if (v.kind != m.kind || v.n != m.n ||
      static_cast<int>(v.d.size()) != m.dimension())
    throw Error(ErrorCode::kKindMismatch, "tangent does not match metric");
  const Connection cc = canonical_connection(m.kind, m.n, c);
  const int f0 = first_free(m.kind);
  const int nv = free_vertex_count(m.kind, m.n);
  auto dx = [&](int i) { return i >= f0 ? v.d[i - f0] : 0.0; };
  auto dlog_size = [&](int i) {
    return m.sizes.empty() ? 0.0 : v.d[nv + i];
  };
  const double xi = m.lift(cc.i);
  const double xj = m.lift(cc.j + static_cast<long>(cc.k) * m.n);
  // l = ln((xi - xj)^2 / (hi hj)), or ln(H / hj) when xi is infinite.
  if (is_infinite(xi)) return dlog_size(cc.i) - dlog_size(cc.j);
  return 2 * (dx(cc.i) - dx(cc.j)) / (xi - xj) - dlog_size(cc.i) -
         dlog_size(cc.j);
}

bool admissible(const PolygonMetric& m, const TangentVector& v, int kmax) {
  if (v.kind != m.kind || v.n != m.n)
    throw Error(ErrorCode::kKindMismatch, "tangent does not match metric");
  const int kk = is_punctured(m.kind) ? kmax : 0;
  const double floor = 1e-12 * std::max(1.0, v.norm());
  for (const Connection& c : connections(m.kind, m.n, kk))
    if (!(length_derivative(m, v, c) > floor)) return false;
  return true;
}

PolygonMetric rotate_punctured(const PolygonMetric& m) {
  if (!is_punctured(m.kind))
    throw Error(ErrorCode::kKindMismatch, "punctured kinds only");
  PolygonMetric r = m;
  for (int i = 0; i < m.n; ++i) {
    r.x[i] = m.lift(i + 1) - m.x[1];
    if (!m.sizes.empty()) r.sizes[i] = m.sizes[(i + 1) % m.n];
  }
  return r;
}

}  // namespace stripcomplex
