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

#include "stripcomplex/lorentz.h"
#include "stripcomplex/models.h"

namespace stripcomplex {

// A horoball, stored as a future light-like vector v. The horoball is the set
// of hyperboloid points w with <w, v> > -1.
struct Horoball {
  MinVector v;
};

// Upper half-plane view: base point and Euclidean diameter, or the height of
// the horizontal line when the base is infinity.
struct UhpHoroball {
  double base = 0;
  double size = 1;
};

// Throws kInvalidInput unless v is future light-like.
Horoball make_horoball(const MinVector& v);

Horoball horoball_from_uhp(const UhpHoroball& h);
UhpHoroball horoball_to_uhp(const Horoball& h);

// ln(-<v1, v2> / 2). Negative exactly when the horoballs overlap.
double connection_length(const Horoball& h1, const Horoball& h2);
// sqrt(-<v1, v2>).
double lambda_length(const Horoball& h1, const Horoball& h2);

// Signed horocyclic coordinate of a timelike point: ln(-<p, v>), zero on the
// horocycle and negative inside.
double horocyclic_level(const MinVector& p, const Horoball& h);

}  // namespace stripcomplex
