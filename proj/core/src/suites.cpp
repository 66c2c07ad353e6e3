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
#include "stripcomplex/suites.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <numbers>
#include <set>
#include <thread>

#include "stripcomplex/error.h"
#include "stripcomplex/lorentz.h"
#include "stripcomplex/models.h"
#include "stripcomplex/sampling.h"

namespace stripcomplex {

const char* library_version() { return "1.0.0"; }

const char* bound_name(Bound b) {
  switch (b) {
    case Bound::kAtMost: return "<=";
    case Bound::kAtLeast: return ">=";
    case Bound::kAbove: return ">";
  }
  return "?";
}

bool SuiteReport::pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass()) return false;
  return true;
}

const CheckResult* SuiteReport::find(std::string_view name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "basis",     "codim1", "codim2", "length-derivative",
      "admissible", "proper", "cusp",   "lemmas"};
  return names;
}

void check_suite(std::string_view suite, Kind kind) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw Error(ErrorCode::kInvalidInput,
                "unknown suite '" + std::string(suite) + "'");
  const bool ok = (suite != "admissible" && suite != "proper" &&
                   suite != "cusp") ||
                  (suite == "cusp" ? is_punctured(kind) : is_decorated(kind));
  if (!ok)
    throw Error(ErrorCode::kUnsupported, "suite '" + std::string(suite) +
                                             "' does not apply to kind " +
                                             kind_name(kind));
}

int resolve_threads(int requested) {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  int cap = hw;
  if (const char* env = std::getenv("STRIPCOMPLEX_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) cap = v;
  }
  if (requested > 0) return std::min(requested, cap);
  return cap;
}

namespace {

constexpr size_t kMaxExamples = 5;

// Per-sample bookkeeping, merged in sample order afterwards.
struct Sheet {
  std::vector<CheckResult> checks;
  std::map<std::string, long> tallies;
  long sample = 0;
  std::uint64_t seed = 0;
  std::vector<double> coordinates;

  int add(const std::string& name, Bound bound, double threshold) {
    CheckResult c;
    c.name = name;
    c.bound = bound;
    c.threshold = threshold;
    c.worst = bound == Bound::kAtMost ? 0 : kInfinity;
    checks.push_back(c);
    return static_cast<int>(checks.size()) - 1;
  }

  void observe(int id, double value, const std::string& detail = {}) {
    CheckResult& c = checks[id];
    ++c.count;
    bool ok;
    switch (c.bound) {
      case Bound::kAtMost:
        ok = value <= c.threshold;
        c.worst = std::max(c.worst, value);
        break;
      case Bound::kAtLeast:
        ok = value >= c.threshold;
        c.worst = std::min(c.worst, value);
        break;
      default:
        ok = value > c.threshold;
        c.worst = std::min(c.worst, value);
        break;
    }
    if (std::isnan(value)) {
      ok = false;
      c.worst = value;
    }
    if (ok) return;
    ++c.failures;
    if (c.examples.size() < kMaxExamples)
      c.examples.push_back({sample, seed, coordinates, detail, value});
  }

  // Boolean checks record 0 for success and 1 for failure.
  void observe_bool(int id, bool ok, const std::string& detail = {}) {
    observe(id, ok ? 0.0 : 1.0, detail);
  }
};

void merge(CheckResult& into, const CheckResult& c) {
  into.count += c.count;
  into.failures += c.failures;
  if (std::isnan(c.worst) || std::isnan(into.worst))
    into.worst = std::nan("");
  else if (c.bound == Bound::kAtMost)
    into.worst = std::max(into.worst, c.worst);
  else
    into.worst = std::min(into.worst, c.worst);
  for (const FailureRecord& f : c.examples)
    if (into.examples.size() < kMaxExamples) into.examples.push_back(f);
}

std::string arc_text(const ArcClass& a) {
  return "(" + std::to_string(a.u) + "," + std::to_string(a.v) + ")";
}

std::string arcs_text(const std::vector<ArcClass>& arcs) {
  std::string s = "[";
  for (size_t i = 0; i < arcs.size(); ++i)
    s += (i ? " " : "") + arc_text(arcs[i]);
  return s + "]";
}

std::string connection_text(const Connection& c) {
  return "{" + std::to_string(c.i) + "," + std::to_string(c.j) + "," +
         std::to_string(c.k) + "}";
}

std::vector<ArcClass> arcs_of(const ArcComplex& ac, const Simplex& s) {
  std::vector<ArcClass> r;
  for (int a : s) r.push_back(ac.arcs()[a]);
  return r;
}

double bound_or(double tol, double fallback) { return tol >= 0 ? tol : fallback; }

// A suite sets up its checks on a fresh sheet and then fills it per sample.
struct Suite {
  std::function<void(Sheet&)> declare;
  std::function<void(Sheet&, Rng&)> sample;
  std::vector<std::string> notes;
};

SuiteReport run_samples(const std::string& name, const SuiteConfig& cfg,
                        const Suite& suite) {
  const auto t0 = std::chrono::steady_clock::now();
  const long count = std::max(0L, cfg.samples);
  std::vector<Sheet> sheets(static_cast<size_t>(count));
  std::atomic<long> next{0};
  std::exception_ptr fatal;
  std::mutex fatal_mutex;

  auto worker = [&] {
    for (;;) {
      const long i = next.fetch_add(1);
      if (i >= count) return;
      Sheet& sh = sheets[static_cast<size_t>(i)];
      suite.declare(sh);
      const int errors = sh.add("evaluation-errors", Bound::kAtMost, 0);
      sh.sample = cfg.first_sample + i;
      sh.seed = sample_seed(cfg.seed, static_cast<std::uint64_t>(sh.sample));
      Rng rng(sh.seed);
      try {
        suite.sample(sh, rng);
        sh.observe_bool(errors, true);
      } catch (const Error& e) {
        sh.observe_bool(errors, false,
                        std::string(error_code_name(e.code())) + ": " + e.what());
      } catch (...) {
        std::lock_guard<std::mutex> lock(fatal_mutex);
        if (!fatal) fatal = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  const int threads =
      static_cast<int>(std::min<long>(resolve_threads(cfg.threads), std::max(1L, count)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (fatal) std::rethrow_exception(fatal);

  SuiteReport rep;
  rep.suite = name;
  rep.config = cfg;
  rep.notes = suite.notes;
  Sheet proto;
  suite.declare(proto);
  proto.add("evaluation-errors", Bound::kAtMost, 0);
  rep.checks = proto.checks;
  for (const Sheet& sh : sheets) {
    for (size_t c = 0; c < rep.checks.size(); ++c) merge(rep.checks[c], sh.checks[c]);
    for (const auto& [k, v] : sh.tallies) rep.tallies[k] += v;
  }
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

StripTemplate config_template(const SuiteConfig& cfg) {
  StripTemplate t;
  t.mode = cfg.mode;
  return t;
}

PolygonMetric draw_metric(const SuiteConfig& cfg, Sheet& sh, Rng& rng) {
  PolygonMetric m = random_metric(cfg.kind, cfg.n, rng);
  sh.coordinates = m.coordinates();
  return m;
}

std::string truncation_note(const SuiteConfig& cfg) {
  return "connections of punctured kinds truncated at |winding| <= " +
         std::to_string(cfg.kmax);
}

// Connection length from the half-plane data, ln((xi - xj)^2 / (hi hj)) or
// ln(H / hj) at infinity; undecorated kinds use the unit auxiliary horoballs.
// The light-cone route loses digits for close vertices.
double horoball_length(const PolygonMetric& m, const Connection& c) {
  const UhpHoroball p = m.uhp_horoball(c.i);
  const UhpHoroball q = m.uhp_horoball(c.j + static_cast<long>(c.k) * m.n);
  if (is_infinite(p.base)) return std::log(p.size) - std::log(q.size);
  if (is_infinite(q.base)) return std::log(q.size) - std::log(p.size);
  return 2 * std::log(std::abs(p.base - q.base)) - std::log(p.size) -
         std::log(q.size);
}

// ---------------------------------------------------------------------------

Suite basis_suite(const SuiteConfig& cfg, const ArcComplex& ac) {
  auto tops = std::make_shared<std::vector<Simplex>>(ac.top_simplices());
  Suite s;
  s.declare = [tol = bound_or(cfg.tol, 1e-8)](Sheet& sh) {
    sh.add("normalized-determinant", Bound::kAbove, tol);
  };
  s.sample = [cfg, &ac, tops](Sheet& sh, Rng& rng) {
    const PolygonMetric m = draw_metric(cfg, sh, rng);
    for (const Simplex& t : *tops) {
      const auto arcs = arcs_of(ac, t);
      const BasisResult b = basis_matrix(m, arcs, config_template(cfg));
      sh.observe(0, std::abs(b.normalized_det), arcs_text(arcs));
    }
  };
  return s;
}

struct Pair {
  Simplex s1, s2;
};

// Pairs of top simplices sharing a face of the pruned complex.
std::vector<Pair> adjacent_pairs(const ArcComplex& ac) {
  const auto tops = ac.top_simplices();
  std::vector<Pair> out;
  for (size_t i = 0; i < tops.size(); ++i)
    for (size_t j = i + 1; j < tops.size(); ++j) {
      Simplex shared;
      std::set_intersection(tops[i].begin(), tops[i].end(), tops[j].begin(),
                            tops[j].end(), std::back_inserter(shared));
      if (static_cast<int>(shared.size()) != ac.top_size() - 1) continue;
      if (is_decorated(ac.kind()) && !ac.is_filling(shared)) continue;
      out.push_back({tops[i], tops[j]});
    }
  return out;
}

Suite codim1_suite(const SuiteConfig& cfg, const ArcComplex& ac) {
  auto pairs = std::make_shared<std::vector<Pair>>(adjacent_pairs(ac));
  const bool foot = cfg.mode == WaistMode::kFoot;
  // In decorated kinds each decorated vertex of a flip region sits on a side
  // joining consecutive edges, outside the reach of the closed forms.
  const bool closed = foot && !is_decorated(cfg.kind);
  Suite s;
  s.declare = [closed, tol = bound_or(cfg.tol, 1e-9)](Sheet& sh) {
    sh.add("kernel-dimension", Bound::kAtMost, 0);
    sh.add("exclusive-positive", Bound::kAtMost, 0);
    sh.add("shared-nonpositive", Bound::kAtMost, 0);
    if (closed) {
      sh.add("closed-form-residual", Bound::kAtMost, 1e-12);
      sh.add("closed-form-kernel", Bound::kAtMost, tol);
    }
  };
  s.sample = [cfg, &ac, pairs, foot, closed](Sheet& sh, Rng& rng) {
    const PolygonMetric m = draw_metric(cfg, sh, rng);
    for (const Pair& p : *pairs) {
      const auto a1 = arcs_of(ac, p.s1), a2 = arcs_of(ac, p.s2);
      ArcClass x1{}, x2{};
      for (const ArcClass& a : a1)
        if (std::find(a2.begin(), a2.end(), a) == a2.end()) x1 = a;
      for (const ArcClass& a : a2)
        if (std::find(a1.begin(), a1.end(), a) == a1.end()) x2 = a;
      const std::string what = arc_text(x1) + " -> " + arc_text(x2) + " in " +
                               arcs_text(a1);
      // The exclusive signs hold for any template; the shared signs are
      // checked under the template adapted to the flip.
      const StripTemplate own =
          foot ? adapted_template(m, x1, x2) : config_template(cfg);
      const Codim1Result r = codim1_kernel(m, a1, a2, own);
      sh.observe_bool(0, r.kernel_dimension == 1, what);
      sh.observe_bool(1, r.weak_pattern, what);
      const Codim1Result ra =
          foot ? r : codim1_kernel(m, a1, a2, adapted_template(m, x1, x2));
      sh.observe_bool(2, ra.strong_pattern, what);
      ++sh.tallies["pairs"];
      if (!closed) continue;
      const ClosedFormMatch cm = codim1_match(m, a1, a2);
      if (!cm.applicable) continue;
      ++sh.tallies["closed-form-pairs"];
      sh.observe(3, cm.system_residual, what);
      sh.observe(4, cm.kernel_error, what);
    }
  };
  if (foot && !closed)
    s.notes.push_back("closed forms not checked: decorated flips have sides "
                      "joining consecutive edges");
  return s;
}

// Codimension-two faces of the pruned complex.
std::vector<Simplex> codim2_faces(const ArcComplex& ac) {
  std::set<Simplex> faces;
  for (const Simplex& t : ac.top_simplices())
    for (size_t a = 0; a < t.size(); ++a)
      for (size_t b = a + 1; b < t.size(); ++b) {
        Simplex f;
        for (size_t c = 0; c < t.size(); ++c)
          if (c != a && c != b) f.push_back(t[c]);
        if (!is_decorated(ac.kind()) || ac.is_filling(f)) faces.insert(f);
      }
  return {faces.begin(), faces.end()};
}

Suite codim2_suite(const SuiteConfig& cfg, const ArcComplex& ac) {
  auto faces = std::make_shared<std::vector<Simplex>>(codim2_faces(ac));
  Suite s;
  s.declare = [tol = bound_or(cfg.tol, 1e-9)](Sheet& sh) {
    sh.add("angle-sum", Bound::kAtMost, tol);
    sh.add("same-sign", Bound::kAtMost, 0);
  };
  s.sample = [cfg, &ac, faces](Sheet& sh, Rng& rng) {
    const PolygonMetric m = draw_metric(cfg, sh, rng);
    for (const Simplex& f : *faces) {
      const auto arcs = arcs_of(ac, f);
      const LinkDegree d = link_degree(m, arcs, config_template(cfg));
      const std::string what = arcs_text(arcs);
      sh.observe(0, std::abs(std::abs(d.angle_sum) - 2 * std::numbers::pi), what);
      sh.observe_bool(1, d.same_sign, what);
      ++sh.tallies["cycle-length-" + std::to_string(d.cycle_length)];
    }
  };
  return s;
}

Suite length_suite(const SuiteConfig& cfg, const ArcComplex& ac) {
  const bool formula = is_decorated(cfg.kind);
  const bool fd = !is_punctured(cfg.kind);
  Suite s;
  // Undecorated kinds have no crossing-sum check, punctured kinds no finite
  // strips.
  const int sum_id = formula ? 0 : -1;
  const int fd_id = fd ? sum_id + 1 : -1;
  s.declare = [formula, fd, tol = bound_or(cfg.tol, 1e-8)](Sheet& sh) {
    if (formula) sh.add("crossing-sum", Bound::kAtMost, tol);
    if (fd) sh.add("finite-difference", Bound::kAtMost, 1e-6);
  };
  s.sample = [cfg, &ac, formula, fd, sum_id, fd_id](Sheet& sh, Rng& rng) {
    const PolygonMetric m = draw_metric(cfg, sh, rng);
    const StripTemplate t = config_template(cfg);
    const int kk = is_punctured(cfg.kind) ? cfg.kmax : 0;
    const auto conns = connections(cfg.kind, cfg.n, kk);
    if (formula) {
      const Simplex f = random_filling_simplex(ac, rng);
      const BarycentricPoint x = random_interior_point(ac, f, rng);
      const Connection c = conns[rng.index(conns.size())];
      const double analytic = length_derivative(m, strip_map(m, x, t, true), c);
      const double sum = length_derivative_formula(m, x, c, t);
      sh.observe(sum_id, std::abs(analytic - sum) / std::max(1.0, std::abs(analytic)),
                 arcs_text(x.arcs) + " " + connection_text(c));
    }
    if (fd) {
      // Central difference of every connection length along one arc, relative
      // to the largest analytic derivative along it.
      const ArcClass a = ac.arcs()[rng.index(ac.arcs().size())];
      const double h = 1e-5;
      const TangentVector v = infinitesimal_strip(m, a, t);
      const PolygonMetric mp = finite_strip_signed(m, a, t, h);
      const PolygonMetric mm = finite_strip_signed(m, a, t, -h);
      std::vector<double> an, num;
      double scale = 0;
      for (const Connection& c : conns) {
        an.push_back(length_derivative(m, v, c));
        num.push_back((horoball_length(mp, c) - horoball_length(mm, c)) / (2 * h));
        scale = std::max(scale, std::abs(an.back()));
      }
      double worst = 0;
      size_t at = 0;
      for (size_t i = 0; i < an.size(); ++i) {
        const double e = std::abs(an[i] - num[i]) / scale;
        if (e > worst) worst = e, at = i;
      }
      sh.observe(fd_id, worst, arc_text(a) + " " + connection_text(conns[at]));
    }
  };
  s.notes.push_back(truncation_note(cfg));
  return s;
}

Suite admissible_suite(const SuiteConfig& cfg, const ArcComplex& ac) {
  Suite s;
  s.declare = [tol = bound_or(cfg.tol, 0)](Sheet& sh) {
    sh.add("min-length-derivative", Bound::kAbove, tol);
  };
  s.sample = [cfg, &ac](Sheet& sh, Rng& rng) {
    const PolygonMetric m = draw_metric(cfg, sh, rng);
    const Simplex f = random_filling_simplex(ac, rng);
    const BarycentricPoint x = random_interior_point(ac, f, rng);
    const TangentVector v = strip_map(m, x, config_template(cfg), true);
    const int kk = is_punctured(cfg.kind) ? cfg.kmax : 0;
    double low = kInfinity;
    Connection at{};
    for (const Connection& c : connections(cfg.kind, cfg.n, kk)) {
      const double d = length_derivative(m, v, c);
      if (d < low) low = d, at = c;
    }
    sh.observe(0, low, arcs_text(x.arcs) + " " + connection_text(at));
    ++sh.tallies["arcs-" + std::to_string(f.size())];
  };
  s.notes.push_back(truncation_note(cfg));
  return s;
}

Suite proper_suite(const SuiteConfig& cfg, const ArcComplex& ac) {
  Suite s;
  s.declare = [](Sheet& sh) {
    sh.add("blocked-ratio", Bound::kAtMost, 1e-3);
    sh.add("norm-ratio", Bound::kAtLeast, 0.1);
    sh.add("crossed-length-derivative", Bound::kAbove, 0);
  };
  s.sample = [cfg, &ac](Sheet& sh, Rng& rng) {
    const PolygonMetric m = draw_metric(cfg, sh, rng);
    const StripTemplate t = config_template(cfg);
    const int kk = is_punctured(cfg.kind) ? cfg.kmax : 0;
    const auto conns = connections(cfg.kind, cfg.n, kk);
    // A non-filling face I of a top simplex and the connections it blocks:
    // crossed by the rest of the simplex but by no arc of I.
    for (int attempt = 0; attempt < 200; ++attempt) {
      const Simplex top = random_top_simplex(ac, rng);
      std::vector<int> order = top;
      shuffle(order, rng);
      const size_t keep = 1 + rng.index(top.size() - 1);
      Simplex face(order.begin(), order.begin() + static_cast<long>(keep));
      std::sort(face.begin(), face.end());
      if (ac.is_filling(face)) continue;
      Simplex rest;
      for (int a : top)
        if (!std::binary_search(face.begin(), face.end(), a)) rest.push_back(a);
      std::vector<Connection> blocked, crossed;
      for (const Connection& c : conns) {
        int in_face = 0, in_rest = 0;
        for (int a : face) in_face += crossing_count(m, ac.arcs()[a], c);
        for (int a : rest) in_rest += crossing_count(m, ac.arcs()[a], c);
        if (in_face == 0 && in_rest > 0) blocked.push_back(c);
        if (in_face > 0) crossed.push_back(c);
      }
      if (blocked.empty() || crossed.empty()) continue;

      auto point = [&](double eps) {
        BarycentricPoint x;
        for (int a : face) {
          x.arcs.push_back(ac.arcs()[a]);
          x.weights.push_back((1 - eps) / static_cast<double>(face.size()));
        }
        for (int a : rest) {
          x.arcs.push_back(ac.arcs()[a]);
          x.weights.push_back(eps / static_cast<double>(rest.size()));
        }
        return x;
      };
      const std::string what =
          arcs_text(arcs_of(ac, face)) + " + " + arcs_text(arcs_of(ac, rest));
      const double eps[] = {0.5, 1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
      std::vector<double> first_blocked;
      double first_norm = 0, low_crossed = kInfinity;
      double ratio = 0, norm_ratio = kInfinity;
      for (double e : eps) {
        const TangentVector v = strip_map(m, point(e), t, true);
        if (e == eps[0]) first_norm = v.norm();
        norm_ratio = std::min(norm_ratio, v.norm() / first_norm);
        for (size_t i = 0; i < blocked.size(); ++i) {
          const double d = length_derivative(m, v, blocked[i]);
          if (e == eps[0]) first_blocked.push_back(d);
          if (e == eps[5]) ratio = std::max(ratio, std::abs(d) / first_blocked[i]);
        }
        for (const Connection& c : crossed)
          low_crossed = std::min(low_crossed, length_derivative(m, v, c));
      }
      sh.observe(0, ratio, what);
      sh.observe(1, norm_ratio, what);
      sh.observe(2, low_crossed, what);
      return;
    }
    throw Error(ErrorCode::kDegenerate, "no non-filling face blocks a connection");
  };
  s.notes.push_back(truncation_note(cfg));
  return s;
}

Suite cusp_suite(const SuiteConfig& cfg, const ArcComplex& ac) {
  Suite s;
  s.declare = [tol = bound_or(cfg.tol, 1e-12)](Sheet& sh) {
    sh.add("trace-pairing", Bound::kAtMost, tol);
  };
  s.sample = [cfg, &ac](Sheet& sh, Rng& rng) {
    const PolygonMetric m = draw_metric(cfg, sh, rng);
    Eigen::Matrix2d hol;
    hol << 1, 1, 0, 1;
    // Maximal arcs with the canonical waist: the template's default xi is the
    // fixed point of the holonomy.
    for (const ArcClass& a : ac.arcs()) {
      if (!is_maximal(cfg.kind, cfg.n, a)) continue;
      for (WaistMode mode : {WaistMode::kIntrinsic, WaistMode::kFoot}) {
        StripTemplate t;
        t.mode = mode;
        const RealizedArc r = realize_arc(m, a, t);
        sh.observe(0, std::abs(trace_pairing(r.field, hol)),
                   arc_text(a) + " " + waist_mode_name(mode));
      }
    }
  };
  return s;
}

// Perpendicular centre of two disjoint semicircles, as given by the lemma.
double formula_center(double a1, double b1, double a2, double b2) {
  return (a2 * b2 - a1 * b1) / (a2 + b2 - a1 - b1);
}

Suite lemma_suite(const SuiteConfig& cfg) {
  Suite s;
  s.declare = [tol = bound_or(cfg.tol, 1e-9)](Sheet& sh) {
    sh.add("centre-orthogonality", Bound::kAtMost, tol);
    sh.add("ratio-identity", Bound::kAtMost, tol);
    sh.add("centre-ordering", Bound::kAtMost, 0);
    sh.add("chord-duality", Bound::kAtMost, 0);
  };
  s.sample = [](Sheet& sh, Rng& rng) {
    double p[6];
    for (double& v : p) v = rng.uniform(-10, 10);
    std::sort(p, p + 6);
    sh.coordinates.assign(p, p + 6);
    const Geodesic g1 = Geodesic::through(p[0], p[1]);
    const Geodesic g2 = Geodesic::through(p[2], p[3]);
    const Geodesic g3 = Geodesic::through(p[4], p[5]);

    // The circle centred at the formula point through a point of g1 at the
    // right angle must meet g2 at the right angle too: the squared tangent
    // lengths from the centre agree.
    const double c = formula_center(p[0], p[1], p[2], p[3]);
    const double t1 = (c - g1.center()) * (c - g1.center()) - g1.radius() * g1.radius();
    const double t2 = (c - g2.center()) * (c - g2.center()) - g2.radius() * g2.radius();
    const double scale =
        std::max({std::abs(t1), std::abs(t2), (c - g1.center()) * (c - g1.center())});
    double ortho = std::abs(t1 - t2) / scale;
    if (!(t1 > 0)) ortho = kInfinity;
    const Geodesic perp = common_perpendicular(g1, g2);
    ortho = std::max(ortho, std::abs(perp.center() - c) / std::max(1.0, std::abs(c)));
    sh.observe(0, ortho);

    const CenterLemmaReport r = verify_center_lemmas(g1, g2, g3);
    const double ratio = (r.x[0] - r.x[1]) / (r.x[1] - r.x[2]);
    sh.observe(1, r.ratio_residual / std::max(1.0, std::abs(ratio)));
    sh.observe_bool(2, r.ordered);

    // Chord and line in the Klein disk against a direct segment intersection.
    for (int attempt = 0; attempt < 100; ++attempt) {
      auto disk_point = [&](double rmax) {
        const double rad = rmax * std::sqrt(rng.uniform());
        const double th = rng.uniform(0, 2 * std::numbers::pi);
        return std::pair{rad * std::cos(th), rad * std::sin(th)};
      };
      const auto [ax, ay] = disk_point(1);
      const auto [bx, by] = disk_point(1);
      const auto [px, py] = disk_point(0.999);
      const double th = rng.uniform(0, std::numbers::pi);
      const double dx = std::cos(th), dy = std::sin(th);
      // Signed offsets of the endpoints from the line through p along d.
      const double sa = (ax - px) * dy - (ay - py) * dx;
      const double sb = (bx - px) * dy - (by - py) * dx;
      if (std::abs(sa) < 1e-9 || std::abs(sb) < 1e-9) continue;
      const double ex = bx - ax, ey = by - ay;
      const double den = ex * dy - ey * dx;
      bool hit = false;
      if (std::abs(den) > 0) {
        const double u = ((px - ax) * dy - (py - ay) * dx) / den;
        hit = u >= 0 && u <= 1;
      }
      const ProjLine l = line_through(px, py, px + dx, py + dy);
      const bool disjoint = chords_disjoint({ax, ay, bx, by}, l);
      sh.observe_bool(3, disjoint == !hit);
      return;
    }
    throw Error(ErrorCode::kDegenerate, "no chord configuration drawn");
  };
  return s;
}

}  // namespace

SuiteReport run_suite(std::string_view suite, const SuiteConfig& config) {
  check_suite(suite, config.kind);
  if (config.samples < 0)
    throw Error(ErrorCode::kInvalidInput, "sample count must be >= 0");
  if (config.kmax < 0) throw Error(ErrorCode::kInvalidInput, "kmax must be >= 0");
  const std::string name(suite);
  if (name == "lemmas") return run_samples(name, config, lemma_suite(config));
  const ArcComplex ac(config.kind, config.n);
  if (name == "basis") return run_samples(name, config, basis_suite(config, ac));
  if (name == "codim1") return run_samples(name, config, codim1_suite(config, ac));
  if (name == "codim2") return run_samples(name, config, codim2_suite(config, ac));
  if (name == "length-derivative")
    return run_samples(name, config, length_suite(config, ac));
  if (name == "admissible")
    return run_samples(name, config, admissible_suite(config, ac));
  if (name == "proper") return run_samples(name, config, proper_suite(config, ac));
  return run_samples(name, config, cusp_suite(config, ac));
}

ArcComplexStats arc_complex_stats(Kind kind, int n) {
  const auto t0 = std::chrono::steady_clock::now();
  const ArcComplex ac(kind, n);
  ArcComplexStats st;
  st.kind = kind;
  st.n = n;
  st.arcs = static_cast<long long>(ac.arcs().size());
  st.f_vector = ac.f_vector();
  st.euler = ac.euler_characteristic();
  const auto tops = ac.top_simplices();
  st.tops = static_cast<long long>(tops.size());
  st.dimension = ac.top_size() - 1;
  st.pure = true;
  for (const Simplex& t : tops) {
    st.pure = st.pure && static_cast<int>(t.size()) == ac.top_size();
    st.filling_tops += ac.is_filling(t);
  }
  if (!is_decorated(kind)) {
    st.pseudo_manifold = ac.is_pseudo_manifold();
    st.has_sphere_euler = true;
    st.sphere_euler = sphere_euler(st.dimension);
  }
  std::map<int, LinkRow> rows;
  for (const Simplex& s : ac.all_simplices()) {
    if (is_decorated(kind) && !ac.is_filling(s)) continue;
    const int k = static_cast<int>(s.size()) - 1;
    LinkRow& row = rows[k];
    row.k = k;
    row.expected_euler = sphere_euler(st.dimension - 1 - k);
    ++row.simplices;
    if (ac.link_euler_characteristic(s) != row.expected_euler) ++row.link_violations;
    const ConsistencyReport cr = ac.consistency_count(s);
    if (cr.applicable && cr.total_corners != cr.expected) ++row.corner_violations;
  }
  for (const auto& [k, row] : rows) st.links.push_back(row);
  st.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return st;
}

}  // namespace stripcomplex
