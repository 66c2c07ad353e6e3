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
#include <bit>
#include <cstdint>
#include <vector>

#include "stripcomplex/polygons.h"

namespace stripcomplex {

// An arc is a chord (u, v), u < v, between positions of the combinatorial
// polygon P_m: m = n for undecorated kinds, where position p is the edge
// (x_p, x_{p+1}); m = 2n for decorated kinds, where position 2i is the edge
// (x_i, x_{i+1}) and position 2i+1 is the vertex x_{i+1}. In punctured kinds
// positions live on the universal cover Z, the arc (u, v) has 0 <= u < m and
// 2 <= v - u <= m, and (u + jm, v + jm) are its lifts.
struct ArcClass {
  int u = 0, v = 0;
  bool operator==(const ArcClass&) const = default;
  auto operator<=>(const ArcClass&) const = default;
};

int period(Kind kind, int n);
// Odd positions of decorated kinds are vertices.
inline bool is_vertex_position(Kind kind, long p) {
  return is_decorated(kind) && (p & 1);
}
// Arc with both endpoints on one edge, going around the puncture.
bool is_maximal(Kind kind, int n, const ArcClass& a);

// Throws kInvalidInput when n is out of range.
std::vector<ArcClass> enumerate_arcs(Kind kind, int n);
bool compatible(Kind kind, int n, const ArcClass& a1, const ArcClass& a2);

// Fixed-width set of arc indices.
class ArcSet {
 public:
  static constexpr int kCapacity = 256;
  void set(int i) { w_[i >> 6] |= bit(i); }
  void reset(int i) { w_[i >> 6] &= ~bit(i); }
  bool test(int i) const { return (w_[i >> 6] & bit(i)) != 0; }
  bool empty() const { return !(w_[0] | w_[1] | w_[2] | w_[3]); }
  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  int first() const {
    for (int k = 0; k < 4; ++k)
      if (w_[k]) return 64 * k + std::countr_zero(w_[k]);
    return -1;
  }
  ArcSet operator&(const ArcSet& o) const {
    ArcSet r;
    for (int k = 0; k < 4; ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }
  ArcSet operator|(const ArcSet& o) const {
    ArcSet r;
    for (int k = 0; k < 4; ++k) r.w_[k] = w_[k] | o.w_[k];
    return r;
  }
  ArcSet minus(const ArcSet& o) const {
    ArcSet r;
    for (int k = 0; k < 4; ++k) r.w_[k] = w_[k] & ~o.w_[k];
    return r;
  }
  bool operator==(const ArcSet&) const = default;
  std::vector<int> members() const;

 private:
  static std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }
  std::array<std::uint64_t, 4> w_{};
};

// Sorted list of arc indices.
using Simplex = std::vector<int>;

// A complementary component of an arc system, read off on P_m.
struct Face {
  // Visited positions, in order; for the punctured face one period.
  std::vector<long> corners;
  int boundary_sides = 0;
  int internal_sides = 0;
  bool punctured = false;
  // Index of the arc the face lies beneath, -1 for the outer or punctured
  // face. For finite faces of punctured kinds, lift is the winding of that arc.
  int top_arc = -1;
  int lift = 0;
  // Decorated vertices (odd corners) for decorated kinds, spikes (boundary
  // sides) otherwise.
  int vertex_corners(Kind kind) const;
};

struct ConsistencyReport {
  bool applicable = false;
  int total_corners = 0;
  int expected = 0;
};

class ArcComplex {
 public:
  // Guards: n <= 12 for non-punctured kinds, n <= 8 for punctured ones.
  ArcComplex(Kind kind, int n);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int m() const { return m_; }
  // Size of top simplices.
  int top_size() const { return tangent_dimension(kind_, n_); }
  const std::vector<ArcClass>& arcs() const { return arcs_; }
  int index_of(const ArcClass& a) const;
  bool compatible(int i, int j) const { return adj_[i].test(j); }
  const ArcSet& neighbours(int i) const { return adj_[i]; }
  bool is_simplex(const Simplex& s) const;

  // Maximal cliques of the compatibility graph, sorted.
  std::vector<Simplex> top_simplices() const;
  // Every simplex (nonempty clique), sorted by size then lexicographically.
  std::vector<Simplex> all_simplices() const;
  // f[k] counts simplices with k + 1 arcs.
  std::vector<long long> f_vector() const;
  long long euler_characteristic() const;

  // Arcs compatible with every arc of s and not in s.
  ArcSet link_vertices(const Simplex& s) const;
  long long link_euler_characteristic(const Simplex& s) const;
  // Euler characteristic of the flag complex spanned by a vertex set.
  long long euler_characteristic(const ArcSet& vertices) const;

  std::vector<Face> faces(const Simplex& s) const;
  bool is_filling(const Simplex& s) const;
  ConsistencyReport consistency_count(const Simplex& s) const;

  // Every codimension-one face lies in exactly two top simplices.
  bool is_pseudo_manifold() const;

 private:
  Kind kind_;
  int n_, m_;
  std::vector<ArcClass> arcs_;
  std::vector<ArcSet> adj_;
};

// Sphere Euler characteristic 1 + (-1)^d.
inline long long sphere_euler(int d) { return d % 2 == 0 ? 2 : 0; }

// Simplex helpers on explicit arc lists.
bool is_filling(Kind kind, int n, const std::vector<ArcClass>& arcs);

}  // namespace stripcomplex
