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
#include "stripcomplex/sampling.h"

#include <algorithm>
#include <cmath>

#include "stripcomplex/error.h"

namespace stripcomplex {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t sample_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master;
  const std::uint64_t a = splitmix64(s);
  std::uint64_t t = a ^ (index * 0xd1b54a32d192ed03ULL);
  return splitmix64(t);
}

double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

std::size_t Rng::index(std::size_t k) {
  return std::min(k - 1, static_cast<std::size_t>(uniform() * k));
}

namespace {

constexpr int kMaxAttempts = 1000;

std::vector<double> sorted_free(int count, double lo, double hi, double gap,
                                Rng& rng, double left, double right) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<double> v(count);
    for (double& x : v) x = rng.uniform(lo, hi);
    std::sort(v.begin(), v.end());
    bool ok = count == 0 || (v.front() - left >= gap && right - v.back() >= gap);
    for (int i = 1; i < count && ok; ++i) ok = v[i] - v[i - 1] >= gap;
    if (ok) return v;
  }
  throw Error(ErrorCode::kDegenerate, "vertex draw kept violating the gap");
}

}  // namespace

void shuffle(std::vector<int>& v, Rng& rng) {
  // Fisher-Yates on Rng::index, so the order does not depend on the
  // standard library.
  for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.index(i)]);
}

PolygonMetric random_metric(Kind kind, int n, Rng& rng) {
  if (n < min_vertices(kind))
    throw Error(ErrorCode::kWrongArity, "too few vertices");
  const bool punct = is_punctured(kind);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const int nf = free_vertex_count(kind, n);
    std::vector<double> free =
        punct ? sorted_free(nf, 0, 1, 0.5 / (4 * n), rng, 0, 1)
              : sorted_free(nf, 1, 5, 0.05, rng, 1, kInfinity);
    std::vector<double> sizes;
    if (is_decorated(kind)) {
      const PolygonMetric bare = make_metric(
          punct ? Kind::kPunctured : Kind::kIdeal, n, free, {});
      sizes.assign(n, 0.0);
      double hmax = 0;
      for (int i = 0; i < n; ++i) {
        if (is_infinite(bare.x[i])) continue;
        double d = punct ? 1.0 : kInfinity;
        for (int j = 0; j < n; ++j) {
          if (is_infinite(bare.x[j])) continue;
          for (int k = punct ? -1 : 0; k <= (punct ? 1 : 0); ++k) {
            if (j == i && k == 0) continue;
            d = std::min(d, std::abs(bare.x[j] + k - bare.x[i]));
          }
        }
        sizes[i] = rng.log_uniform(0.05, 0.9) * d;
        hmax = std::max(hmax, sizes[i]);
      }
      const double f0 = rng.log_uniform(0.05, 0.9);
      if (!punct) sizes[0] = hmax / f0;
    }
    PolygonMetric m = make_metric(kind, n, free, sizes);
    try {
      validate_metric(m);
      return m;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::kDegenerate, "no valid metric drawn");
}

Simplex random_top_simplex(const ArcComplex& ac, Rng& rng) {
  std::vector<int> order(ac.arcs().size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  shuffle(order, rng);
  Simplex s;
  for (int a : order) {
    bool ok = true;
    for (int b : s) ok = ok && ac.compatible(a, b);
    if (ok) s.push_back(a);
  }
  std::sort(s.begin(), s.end());
  return s;
}

Simplex random_filling_simplex(const ArcComplex& ac, Rng& rng) {
  Simplex s = random_top_simplex(ac, rng);
  if (!ac.is_filling(s))
    throw Error(ErrorCode::kDegenerate, "top simplex is not filling");
  std::vector<int> order = s;
  shuffle(order, rng);
  for (int a : order) {
    if (s.size() == 1 || rng.uniform() < 0.5) continue;
    Simplex t;
    for (int b : s)
      if (b != a) t.push_back(b);
    if (ac.is_filling(t)) s = t;
  }
  return s;
}

BarycentricPoint random_interior_point(const ArcComplex& ac, const Simplex& s,
                                       Rng& rng) {
  BarycentricPoint x;
  double sum = 0;
  for (int a : s) {
    x.arcs.push_back(ac.arcs()[a]);
    const double w = std::max(1e-3, -std::log(1 - rng.uniform()));
    x.weights.push_back(w);
    sum += w;
  }
  for (double& w : x.weights) w /= sum;
  return x;
}

}  // namespace stripcomplex
