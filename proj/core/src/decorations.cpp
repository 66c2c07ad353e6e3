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
#include "stripcomplex/decorations.h"

#include <cmath>

#include "stripcomplex/error.h"

namespace stripcomplex {

Horoball make_horoball(const MinVector& v) {
  const double s = euclid_norm(v);
  if (!(s > 0) || !std::isfinite(s) || v.z <= 0 ||
      std::abs(min_norm2(v / s)) > kEpsClass)
    throw Error(ErrorCode::kInvalidInput, "not a future light-like vector");
  return {v};
}

// A finite base r with diameter h is (2/h) times the light vector of r, whose
// quadratic is (z - r)^2. The horizontal line at height H is 2H times the
// light vector of infinity.
Horoball horoball_from_uhp(const UhpHoroball& h) {
  if (!(h.size > 0) || !std::isfinite(h.size))
    throw Error(ErrorCode::kInvalidInput, "horoball size must be positive");
  if (is_infinite(h.base)) return {boundary_light_vector(kInfinity) * (2 * h.size)};
  if (!std::isfinite(h.base))
    throw Error(ErrorCode::kInvalidInput, "bad horoball base");
  return {boundary_light_vector(h.base) * (2 / h.size)};
}

UhpHoroball horoball_to_uhp(const Horoball& h) {
  const double a = h.v.z - h.v.x, b = 2 * h.v.y, c = h.v.x + h.v.z;
  if (std::abs(a) <= 1e-14 * euclid_norm(h.v)) return {kInfinity, c / 2};
  return {-b / (2 * a), 2 / a};
}

double connection_length(const Horoball& h1, const Horoball& h2) {
  const double p = -min_inner(h1.v, h2.v);
  const double scale = euclid_norm(h1.v) * euclid_norm(h2.v);
  if (!(p > kEpsClass * scale))
    throw Error(ErrorCode::kInvalidInput, "horoballs share a base point");
  return std::log(p / 2);
}

double lambda_length(const Horoball& h1, const Horoball& h2) {
  const double p = -min_inner(h1.v, h2.v);
  const double scale = euclid_norm(h1.v) * euclid_norm(h2.v);
  if (!(p > kEpsClass * scale))
    throw Error(ErrorCode::kInvalidInput, "horoballs share a base point");
  return std::sqrt(p);
}

double horocyclic_level(const MinVector& p, const Horoball& h) {
  return std::log(-min_inner(p, h.v));
}

}  // namespace stripcomplex
