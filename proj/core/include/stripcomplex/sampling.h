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
#ifndef STRIPCOMPLEX_SAMPLING_H_
#define STRIPCOMPLEX_SAMPLING_H_

// Seeded generators for the randomized sweeps. Every draw is a function of
// (master seed, sample index), so serial and parallel runs agree.

#include <cstdint>
#include <random>
#include <vector>

#include "stripcomplex/arccomplex.h"
#include "stripcomplex/polygons.h"
#include "stripcomplex/strips.h"

namespace stripcomplex {

std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t sample_seed(std::uint64_t master, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double log_uniform(double lo, double hi);
  // Uniform integer in [0, k).
  std::size_t index(std::size_t k);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Generator: free vertex coordinates sorted uniform in (1, 5), or (0, 1) for
// punctured kinds, with a minimum gap; decoration diameters
// f * (distance to the nearest other vertex or lift), f log-uniform in
// [0.05, 0.9]; the height at infinity is max(h) / f0. Draws failing
// validate_metric are rejected.
PolygonMetric random_metric(Kind kind, int n, Rng& rng);

void shuffle(std::vector<int>& v, Rng& rng);

// A random top simplex, grown greedily from a shuffled arc list.
Simplex random_top_simplex(const ArcComplex& ac, Rng& rng);

// Face of a random top simplex: each arc is dropped with probability 1/2 as
// long as the rest stays filling.
Simplex random_filling_simplex(const ArcComplex& ac, Rng& rng);

// Weights drawn from a flat Dirichlet, floored at 1e-3 before renormalizing.
BarycentricPoint random_interior_point(const ArcComplex& ac, const Simplex& s,
                                       Rng& rng);

}  // namespace stripcomplex

#endif  // STRIPCOMPLEX_SAMPLING_H_
