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
#include "stripcomplex/arccomplex.h"

#include <algorithm>
#include <map>

#include "stripcomplex/error.h"

namespace stripcomplex {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool interleave(long u1, long v1, long u2, long v2) {
  return (u1 < u2 && u2 < v1 && v1 < v2) || (u2 < u1 && u1 < v2 && v2 < v1);
}

void check_range(Kind kind, int n) {
  if (n < min_vertices(kind))
    throw Error(ErrorCode::kInvalidInput, "too few vertices for this kind");
}

}  // namespace

int period(Kind kind, int n) { return is_decorated(kind) ? 2 * n : n; }

bool is_maximal(Kind kind, int n, const ArcClass& a) {
  return is_punctured(kind) && a.v - a.u == period(kind, n);
}

std::vector<ArcClass> enumerate_arcs(Kind kind, int n) {
  check_range(kind, n);
  const int m = period(kind, n);
  std::vector<ArcClass> out;
  if (!is_punctured(kind)) {
    for (int u = 0; u < m; ++u)
      for (int v = u + 2; v < m; ++v) {
        if (u == 0 && v == m - 1) continue;
        if (is_vertex_position(kind, u) && is_vertex_position(kind, v)) continue;
        out.push_back({u, v});
      }
    return out;
  }
  for (int u = 0; u < m; ++u)
    for (int d = 2; d <= m; ++d) {
      const int v = u + d;
      if (is_vertex_position(kind, u) && is_vertex_position(kind, v)) continue;
      out.push_back({u, v});
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool compatible(Kind kind, int n, const ArcClass& a1, const ArcClass& a2) {
  if (!is_punctured(kind)) return !interleave(a1.u, a1.v, a2.u, a2.v);
  const long m = period(kind, n);
  const long jlo = floor_div(a1.u - a2.v, m) - 1;
  const long jhi = floor_div(a1.v - a2.u, m) + 1;
  for (long j = jlo; j <= jhi; ++j)
    if (interleave(a1.u, a1.v, a2.u + j * m, a2.v + j * m)) return false;
  return true;
}

std::vector<int> ArcSet::members() const {
  std::vector<int> r;
  for (int k = 0; k < 4; ++k) {
    std::uint64_t w = w_[k];
    while (w) {
      r.push_back(64 * k + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return r;
}

int Face::vertex_corners(Kind kind) const {
  if (!is_decorated(kind)) return boundary_sides;
  int c = 0;
  for (long p : corners) c += (p & 1) ? 1 : 0;
  return c;
}

ArcComplex::ArcComplex(Kind kind, int n) : kind_(kind), n_(n) {
  check_range(kind, n);
  if (n > (is_punctured(kind) ? 8 : 12))
    throw Error(ErrorCode::kResourceGuard, "n exceeds the enumeration guard");
  m_ = period(kind, n);
  arcs_ = enumerate_arcs(kind, n);
  adj_.resize(arcs_.size());
  for (size_t i = 0; i < arcs_.size(); ++i)
    for (size_t j = i + 1; j < arcs_.size(); ++j)
      if (stripcomplex::compatible(kind, n, arcs_[i], arcs_[j])) {
        adj_[i].set(static_cast<int>(j));
        adj_[j].set(static_cast<int>(i));
      }
}

int ArcComplex::index_of(const ArcClass& a) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
  if (it == arcs_.end() || !(*it == a))
    throw Error(ErrorCode::kInvalidInput, "not a permitted arc");
  return static_cast<int>(it - arcs_.begin());
}

bool ArcComplex::is_simplex(const Simplex& s) const {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= static_cast<int>(arcs_.size())) return false;
    for (size_t j = i + 1; j < s.size(); ++j)
      if (!adj_[s[i]].test(s[j])) return false;
  }
  return true;
}

namespace {

void bron_kerbosch(const std::vector<ArcSet>& adj, std::vector<int>& r,
                   ArcSet p, ArcSet x, std::vector<Simplex>& out) {
  if (p.empty()) {
    if (x.empty()) {
      Simplex s = r;
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
    return;
  }
  // Pivot with the most neighbours in p.
  int pivot = -1, best = -1;
  for (int u : (p | x).members()) {
    const int c = (p & adj[u]).count();
    if (c > best) best = c, pivot = u;
  }
  for (int v : p.minus(adj[pivot]).members()) {
    r.push_back(v);
    bron_kerbosch(adj, r, p & adj[v], x & adj[v], out);
    r.pop_back();
    p.reset(v);
    x.set(v);
  }
}

template <class F>
void each_clique(const std::vector<ArcSet>& adj, std::vector<int>& r,
                 const ArcSet& cand, F&& f) {
  for (int v : cand.members()) {
    r.push_back(v);
    f(r);
    ArcSet next = cand & adj[v];
    // Only larger indices, so each clique is produced once.
    for (int u : next.members())
      if (u <= v) next.reset(u);
    each_clique(adj, r, next, f);
    r.pop_back();
  }
}

ArcSet all_of(size_t count) {
  ArcSet s;
  for (size_t i = 0; i < count; ++i) s.set(static_cast<int>(i));
  return s;
}

}  // namespace

std::vector<Simplex> ArcComplex::top_simplices() const {
  std::vector<Simplex> out;
  std::vector<int> r;
  bron_kerbosch(adj_, r, all_of(arcs_.size()), ArcSet{}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> ArcComplex::all_simplices() const {
  std::vector<Simplex> out;
  std::vector<int> r;
  each_clique(adj_, r, all_of(arcs_.size()),
              [&](const std::vector<int>& c) { out.push_back(c); });
  std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<long long> ArcComplex::f_vector() const {
  std::vector<long long> f;
  std::vector<int> r;
  each_clique(adj_, r, all_of(arcs_.size()), [&](const std::vector<int>& c) {
    if (f.size() < c.size()) f.resize(c.size(), 0);
    ++f[c.size() - 1];
  });
  return f;
}

long long ArcComplex::euler_characteristic() const {
  long long chi = 0;
  const std::vector<long long> f = f_vector();
  for (size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0) ? f[k] : -f[k];
  return chi;
}

ArcSet ArcComplex::link_vertices(const Simplex& s) const {
  ArcSet c = all_of(arcs_.size());
  for (int a : s) {
    c = c & adj_[a];
    c.reset(a);
  }
  return c;
}

namespace {

// Sum over all cliques, the empty one included, of (-1)^size.
long long alternating_count(const std::vector<ArcSet>& adj, const ArcSet& cand) {
  if (cand.empty()) return 1;
  const std::vector<int> mem = cand.members();
  for (int v : mem) {
    ArcSet rest = cand;
    rest.reset(v);
    if (rest.minus(adj[v]).empty()) return 0;  // cone
  }
  const int v = mem.front();
  ArcSet rest = cand;
  rest.reset(v);
  return alternating_count(adj, rest) - alternating_count(adj, cand & adj[v]);
}

}  // namespace

long long ArcComplex::euler_characteristic(const ArcSet& vertices) const {
  return 1 - alternating_count(adj_, vertices);
}

long long ArcComplex::link_euler_characteristic(const Simplex& s) const {
  return euler_characteristic(link_vertices(s));
}

std::vector<Face> ArcComplex::faces(const Simplex& s) const {
  std::vector<Face> out;
  const bool punct = is_punctured(kind_);
  // Longest chord of s (lifted in punctured kinds) starting at p and ending
  // at or before limit, skipping the chord (p, limit) when exclude is set.
  auto child = [&](long p, long limit, bool exclude) -> long {
    long best = -1;
    for (int a : s) {
      const ArcClass& c = arcs_[a];
      long shift;
      if (punct) {
        if (((p - c.u) % m_ + m_) % m_ != 0) continue;
        shift = p - c.u;
      } else {
        if (c.u != p) continue;
        shift = 0;
      }
      const long end = c.v + shift;
      if (end > limit || (exclude && end == limit)) continue;
      best = std::max(best, end);
    }
    return best;
  };
  auto walk = [&](long from, long to, bool exclude, Face& f) {
    long cur = from;
    f.corners.push_back(cur);
    while (cur < to) {
      const long w = child(cur, to, exclude && cur == from);
      if (w > cur) {
        ++f.internal_sides;
        cur = w;
      } else {
        ++f.boundary_sides;
        ++cur;
      }
      f.corners.push_back(cur);
    }
  };
  for (int a : s) {
    Face f;
    f.top_arc = a;
    f.internal_sides = 1;
    walk(arcs_[a].u, arcs_[a].v, true, f);
    out.push_back(std::move(f));
  }
  Face outer;
  if (!punct) {
    walk(0, m_ - 1, false, outer);
    ++outer.boundary_sides;  // the side from m - 1 back to 0
  } else {
    outer.punctured = true;
    long start = -1;
    for (long p = 0; p < m_ && start < 0; ++p) {
      bool covered = false;
      for (int a : s) {
        const ArcClass& c = arcs_[a];
        for (long j = floor_div(p - c.v, m_); j <= floor_div(p - c.u, m_) + 1; ++j)
          if (c.u + j * m_ < p && p < c.v + j * m_) covered = true;
      }
      if (!covered) start = p;
    }
    if (start < 0)
      throw Error(ErrorCode::kDegenerate, "no position on the punctured face");
    walk(start, start + m_, false, outer);
    outer.corners.pop_back();  // one period
  }
  out.push_back(std::move(outer));
  return out;
}

bool ArcComplex::is_filling(const Simplex& s) const {
  for (const Face& f : faces(s)) {
    const int marks = f.vertex_corners(kind_);
    const int budget = f.punctured ? 0 : (is_decorated(kind_) ? 1 : 2);
    if (marks > budget) return false;
  }
  return true;
}

ConsistencyReport ArcComplex::consistency_count(const Simplex& s) const {
  ConsistencyReport r;
  if (!is_filling(s)) return r;
  r.applicable = true;
  for (const Face& f : faces(s))
    r.total_corners += static_cast<int>(f.corners.size());
  r.expected = 2 * static_cast<int>(s.size()) + m_;
  return r;
}

bool ArcComplex::is_pseudo_manifold() const {
  std::map<Simplex, int> count;
  for (const Simplex& t : top_simplices())
    for (size_t i = 0; i < t.size(); ++i) {
      Simplex f = t;
      f.erase(f.begin() + static_cast<long>(i));
      ++count[f];
    }
  for (const auto& [f, c] : count)
    if (c != 2) return false;
  return true;
}

bool is_filling(Kind kind, int n, const std::vector<ArcClass>& arcs) {
  ArcComplex ac(kind, n);
  Simplex s;
  for (const ArcClass& a : arcs) s.push_back(ac.index_of(a));
  std::sort(s.begin(), s.end());
  return ac.is_filling(s);
}

}  // namespace stripcomplex
