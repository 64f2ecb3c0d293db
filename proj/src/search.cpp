#include "fewlen/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "fewlen/constructions.hpp"
#include "fewlen/families.hpp"
#include "fewlen/structure.hpp"

namespace fewlen {

namespace {

uint64_t mix_seed(uint64_t seed, uint64_t salt) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Parameter vector: [x0, y0, x1, y1, ..., l_1 .. l_{k-1}] (class 0 pinned).
struct Objective {
  const Graph& g;
  const LengthAssignment& a;
  bool optimize_lengths = false;
  bool unit_exclusion = false;
  double unit_band = 1e-3;

  int dim() const {
    return 2 * g.vertex_count() + (optimize_lengths ? a.k() - 1 : 0);
  }

  double length_of(const std::vector<double>& th, int cls) const {
    if (!optimize_lengths || cls == 0) return a.lengths[static_cast<size_t>(cls)];
    return th[static_cast<size_t>(2 * g.vertex_count() + cls - 1)];
  }

  double eval(const std::vector<double>& th) const {
    double f = 0.0;
    const auto& edges = g.edges();
    for (size_t e = 0; e < edges.size(); ++e) {
      const auto& [u, v] = edges[e];
      double dx = th[2 * static_cast<size_t>(u)] - th[2 * static_cast<size_t>(v)];
      double dy = th[2 * static_cast<size_t>(u) + 1] - th[2 * static_cast<size_t>(v) + 1];
      double l = length_of(th, a.class_of[e]);
      double r = dx * dx + dy * dy - l * l;
      f += r * r;
    }
    if (unit_exclusion) {
      const double band = 4.0 * unit_band;
      const int n = g.vertex_count();
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          double dx = th[2 * static_cast<size_t>(u)] - th[2 * static_cast<size_t>(v)];
          double dy = th[2 * static_cast<size_t>(u) + 1] - th[2 * static_cast<size_t>(v) + 1];
          double s = dx * dx + dy * dy;
          double gap = std::abs(s - 1.0);
          if (gap < band) f += (band - gap) * (band - gap);
        }
    }
    return f;
  }

  void grad(const std::vector<double>& th, std::vector<double>& out) const {
    out.assign(th.size(), 0.0);
    const auto& edges = g.edges();
    for (size_t e = 0; e < edges.size(); ++e) {
      const auto& [u, v] = edges[e];
      double dx = th[2 * static_cast<size_t>(u)] - th[2 * static_cast<size_t>(v)];
      double dy = th[2 * static_cast<size_t>(u) + 1] - th[2 * static_cast<size_t>(v) + 1];
      int cls = a.class_of[e];
      double l = length_of(th, cls);
      double r = dx * dx + dy * dy - l * l;
      out[2 * static_cast<size_t>(u)] += 4.0 * r * dx;
      out[2 * static_cast<size_t>(u) + 1] += 4.0 * r * dy;
      out[2 * static_cast<size_t>(v)] -= 4.0 * r * dx;
      out[2 * static_cast<size_t>(v) + 1] -= 4.0 * r * dy;
      if (optimize_lengths && cls > 0)
        out[static_cast<size_t>(2 * g.vertex_count() + cls - 1)] -= 4.0 * r * l;
    }
    if (unit_exclusion) {
      const double band = 4.0 * unit_band;
      const int n = g.vertex_count();
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          double dx = th[2 * static_cast<size_t>(u)] - th[2 * static_cast<size_t>(v)];
          double dy = th[2 * static_cast<size_t>(u) + 1] - th[2 * static_cast<size_t>(v) + 1];
          double s = dx * dx + dy * dy;
          double gap = std::abs(s - 1.0);
          if (gap >= band) continue;
          double dpen_ds = -2.0 * (band - gap) * (s >= 1.0 ? 1.0 : -1.0);
          out[2 * static_cast<size_t>(u)] += dpen_ds * 2.0 * dx;
          out[2 * static_cast<size_t>(u) + 1] += dpen_ds * 2.0 * dy;
          out[2 * static_cast<size_t>(v)] -= dpen_ds * 2.0 * dx;
          out[2 * static_cast<size_t>(v) + 1] -= dpen_ds * 2.0 * dy;
        }
    }
  }
};

void gradient_descent(const Objective& obj, std::vector<double>& th, int iters,
                      long long& iter_count) {
  double fx = obj.eval(th);
  std::vector<double> g, cand;
  double t = 0.05;
  for (int it = 0; it < iters; ++it) {
    ++iter_count;
    obj.grad(th, g);
    double gn2 = 0.0;
    for (double v : g) gn2 += v * v;
    if (gn2 < 1e-26) break;
    bool moved = false;
    for (int bt = 0; bt < 45; ++bt) {
      cand = th;
      for (size_t i = 0; i < th.size(); ++i) cand[i] -= t * g[i];
      double fc = obj.eval(cand);
      if (fc <= fx - 0.3 * t * gn2) {
        th.swap(cand);
        fx = fc;
        t *= 1.8;
        moved = true;
        break;
      }
      t *= 0.5;
      if (t < 1e-18) break;
    }
    if (!moved) break;
  }
}

// Cholesky solve of (A + ridge I) x = b for symmetric positive semidefinite A.
bool solve_spd(std::vector<double>& A, std::vector<double>& b, int n, double ridge) {
  for (int i = 0; i < n; ++i) A[static_cast<size_t>(i * n + i)] += ridge;
  for (int c = 0; c < n; ++c) {
    double d = A[static_cast<size_t>(c * n + c)];
    for (int k = 0; k < c; ++k) {
      double l = A[static_cast<size_t>(c * n + k)];
      d -= l * l;
    }
    if (d <= 0) return false;
    d = std::sqrt(d);
    A[static_cast<size_t>(c * n + c)] = d;
    for (int r2 = c + 1; r2 < n; ++r2) {
      double v = A[static_cast<size_t>(r2 * n + c)];
      for (int k = 0; k < c; ++k)
        v -= A[static_cast<size_t>(r2 * n + k)] * A[static_cast<size_t>(c * n + k)];
      A[static_cast<size_t>(r2 * n + c)] = v / d;
    }
  }
  for (int i = 0; i < n; ++i) {
    double v = b[static_cast<size_t>(i)];
    for (int k = 0; k < i; ++k) v -= A[static_cast<size_t>(i * n + k)] * b[static_cast<size_t>(k)];
    b[static_cast<size_t>(i)] = v / A[static_cast<size_t>(i * n + i)];
  }
  for (int i = n - 1; i >= 0; --i) {
    double v = b[static_cast<size_t>(i)];
    for (int k = i + 1; k < n; ++k)
      v -= A[static_cast<size_t>(k * n + i)] * b[static_cast<size_t>(k)];
    b[static_cast<size_t>(i)] = v / A[static_cast<size_t>(i * n + i)];
  }
  return true;
}

// Levenberg-Marquardt on the squared-length residuals.
void lm_polish(const Objective& obj, std::vector<double>& th, int iters, long long& iter_count) {
  const int dim = obj.dim();
  if (dim > 160) return;  // the descent phase carries large instances
  const auto& edges = obj.g.edges();
  const int m = static_cast<int>(edges.size());
  if (m == 0) return;

  auto residuals = [&](const std::vector<double>& t, std::vector<double>& r) {
    r.resize(static_cast<size_t>(m));
    for (int e = 0; e < m; ++e) {
      const auto& [u, v] = edges[static_cast<size_t>(e)];
      double dx = t[2 * static_cast<size_t>(u)] - t[2 * static_cast<size_t>(v)];
      double dy = t[2 * static_cast<size_t>(u) + 1] - t[2 * static_cast<size_t>(v) + 1];
      double l = obj.length_of(t, obj.a.class_of[static_cast<size_t>(e)]);
      r[static_cast<size_t>(e)] = dx * dx + dy * dy - l * l;
    }
  };

  std::vector<double> r, J(static_cast<size_t>(m * dim));
  residuals(th, r);
  double f = 0.0;
  for (double v : r) f += v * v;
  double lambda = 1e-4;

  for (int it = 0; it < iters; ++it) {
    ++iter_count;
    std::fill(J.begin(), J.end(), 0.0);
    for (int e = 0; e < m; ++e) {
      const auto& [u, v] = edges[static_cast<size_t>(e)];
      double dx = th[2 * static_cast<size_t>(u)] - th[2 * static_cast<size_t>(v)];
      double dy = th[2 * static_cast<size_t>(u) + 1] - th[2 * static_cast<size_t>(v) + 1];
      J[static_cast<size_t>(e * dim + 2 * u)] = 2 * dx;
      J[static_cast<size_t>(e * dim + 2 * u + 1)] = 2 * dy;
      J[static_cast<size_t>(e * dim + 2 * v)] = -2 * dx;
      J[static_cast<size_t>(e * dim + 2 * v + 1)] = -2 * dy;
      int cls = obj.a.class_of[static_cast<size_t>(e)];
      if (obj.optimize_lengths && cls > 0) {
        double l = obj.length_of(th, cls);
        J[static_cast<size_t>(e * dim + 2 * obj.g.vertex_count() + cls - 1)] = -2 * l;
      }
    }
    // normal equations
    std::vector<double> JtJ(static_cast<size_t>(dim * dim), 0.0), Jtr(static_cast<size_t>(dim), 0.0);
    for (int e = 0; e < m; ++e) {
      for (int i = 0; i < dim; ++i) {
        double je = J[static_cast<size_t>(e * dim + i)];
        if (je == 0.0) continue;
        Jtr[static_cast<size_t>(i)] += je * r[static_cast<size_t>(e)];
        for (int j2 = i; j2 < dim; ++j2)
          JtJ[static_cast<size_t>(i * dim + j2)] += je * J[static_cast<size_t>(e * dim + j2)];
      }
    }
    for (int i = 0; i < dim; ++i)
      for (int j2 = 0; j2 < i; ++j2)
        JtJ[static_cast<size_t>(i * dim + j2)] = JtJ[static_cast<size_t>(j2 * dim + i)];

    bool improved = false;
    for (int tries = 0; tries < 8; ++tries) {
      std::vector<double> A = JtJ, step = Jtr;
      if (solve_spd(A, step, dim, lambda * (1.0 + f))) {
        std::vector<double> cand = th;
        for (int i = 0; i < dim; ++i) cand[static_cast<size_t>(i)] -= step[static_cast<size_t>(i)];
        std::vector<double> rc;
        residuals(cand, rc);
        double fc = 0.0;
        for (double v : rc) fc += v * v;
        if (fc < f) {
          th.swap(cand);
          r.swap(rc);
          f = fc;
          lambda = std::max(lambda * 0.3, 1e-12);
          improved = true;
          break;
        }
      }
      lambda *= 10.0;
    }
    if (!improved || f < 1e-28) break;
  }
}

Drawing positions_to_drawing(const Graph& g, const std::vector<double>& th, DrawingKind kind) {
  Drawing d;
  d.graph = g;
  d.kind = kind;
  for (int v = 0; v < g.vertex_count(); ++v)
    d.pos.push_back({th[2 * static_cast<size_t>(v)], th[2 * static_cast<size_t>(v) + 1]});
  return d;
}

bool exclusion_clear(const Drawing& d, double band) {
  const int n = d.graph.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (d.graph.has_edge(u, v)) continue;
      if (std::abs(dist(d.pos[static_cast<size_t>(u)], d.pos[static_cast<size_t>(v)]) - 1.0) <=
          band)
        return false;
    }
  return true;
}

struct RestartOutcome {
  bool success = false;
  double residual = std::numeric_limits<double>::infinity();
  std::vector<double> th;
  long long iterations = 0;
};

}  // namespace

void LengthAssignment::validate(const Graph& g) const {
  if (lengths.empty()) throw std::invalid_argument("assignment needs at least one class");
  if (static_cast<int>(class_of.size()) != g.edge_count())
    throw std::invalid_argument("assignment does not cover all edges");
  for (int c : class_of)
    if (c < 0 || c >= k()) throw std::invalid_argument("edge class out of range");
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (!(lengths[i] > 0)) throw std::invalid_argument("lengths must be positive");
    if (i > 0 && !(lengths[i] > lengths[i - 1]))
      throw std::invalid_argument("lengths must be strictly increasing");
  }
}

double assignment_max_residual(const Graph& g, const LengthAssignment& a,
                               const std::vector<Point>& pos) {
  a.validate(g);
  double worst = 0.0;
  const auto& edges = g.edges();
  for (size_t e = 0; e < edges.size(); ++e) {
    const auto& [u, v] = edges[e];
    double d = dist(pos[static_cast<size_t>(u)], pos[static_cast<size_t>(v)]);
    worst = std::max(worst, std::abs(d - a.lengths[static_cast<size_t>(a.class_of[e])]));
  }
  return worst;
}

SearchResult solve_fixed_assignment(const Graph& g, const LengthAssignment& a,
                                    const SolveOptions& opt) {
  a.validate(g);
  SearchResult result;
  result.seed = opt.seed;

  Objective obj{g, a};
  obj.optimize_lengths = opt.optimize_lengths;
  obj.unit_exclusion = opt.unit_exclusion;
  obj.unit_band = opt.unit_band;

  const int n = g.vertex_count();
  const double lmax = a.lengths.back();
  const double spread = 0.6 * lmax * std::sqrt(std::max(n, 1));

  auto run_restart = [&](int ridx) {
    RestartOutcome out;
    std::mt19937_64 rng(mix_seed(opt.seed, static_cast<uint64_t>(ridx)));
    std::uniform_real_distribution<double> init(-spread, spread);
    std::vector<double> th(static_cast<size_t>(obj.dim()));
    for (int i = 0; i < 2 * n; ++i) th[static_cast<size_t>(i)] = init(rng);
    if (obj.optimize_lengths)
      for (int c = 1; c < a.k(); ++c)
        th[static_cast<size_t>(2 * n + c - 1)] = a.lengths[static_cast<size_t>(c)];

    gradient_descent(obj, th, opt.descent_iterations, out.iterations);
    lm_polish(obj, th, opt.polish_iterations, out.iterations);

    LengthAssignment solved = a;
    if (obj.optimize_lengths)
      for (int c = 1; c < a.k(); ++c)
        solved.lengths[static_cast<size_t>(c)] =
            std::abs(th[static_cast<size_t>(2 * n + c - 1)]);
    Drawing d = positions_to_drawing(g, th, opt.require_strict ? DrawingKind::Strict
                                                               : DrawingKind::DegenerateAllowed);
    out.residual = assignment_max_residual(g, solved, d.pos);
    double diam = std::max(drawing_diameter(d), 1e-9);
    bool feasible = out.residual <= opt.feasibility_tol * diam;
    bool strict_ok = true;
    if (feasible && opt.require_strict) {
      auto report = verify_drawing(d, 1e-9, false);
      strict_ok = !report.is_degenerate;
    }
    bool exclusion_ok = true;
    if (feasible && opt.unit_exclusion) exclusion_ok = exclusion_clear(d, opt.unit_band);
    out.success = feasible && strict_ok && exclusion_ok;
    out.th = std::move(th);
    return out;
  };

  std::vector<RestartOutcome> outcomes(static_cast<size_t>(opt.restarts));
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    for (int rdx = 0; rdx < opt.restarts; ++rdx) outcomes[static_cast<size_t>(rdx)] = run_restart(rdx);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&, t]() {
        for (int rdx = t; rdx < opt.restarts; rdx += jobs)
          outcomes[static_cast<size_t>(rdx)] = run_restart(rdx);
      });
    for (auto& th : pool) th.join();
  }

  int best = -1;
  for (int rdx = 0; rdx < opt.restarts; ++rdx) {
    result.iterations += outcomes[static_cast<size_t>(rdx)].iterations;
    if (best < 0) {
      best = rdx;
      continue;
    }
    const auto& cur = outcomes[static_cast<size_t>(rdx)];
    const auto& incumbent = outcomes[static_cast<size_t>(best)];
    if (std::make_pair(!cur.success, cur.residual) <
        std::make_pair(!incumbent.success, incumbent.residual))
      best = rdx;
  }
  if (best >= 0) {
    const auto& chosen = outcomes[static_cast<size_t>(best)];
    result.success = chosen.success;
    result.residual = chosen.residual;
    Drawing d = positions_to_drawing(g, chosen.th,
                                     opt.require_strict ? DrawingKind::Strict
                                                        : DrawingKind::DegenerateAllowed);
    if (chosen.success) {
      result.best_drawing = d;
      result.k_achieved = g.edge_count() > 0 ? classify_lengths(d).count() : 0;
    }
  }
  return result;
}

double gradient_check(const Graph& g, const LengthAssignment& a, const std::vector<Point>& pos) {
  a.validate(g);
  if (static_cast<int>(pos.size()) != g.vertex_count())
    throw std::invalid_argument("positions do not cover all vertices");
  Objective obj{g, a};
  obj.optimize_lengths = true;
  std::vector<double> th(static_cast<size_t>(obj.dim()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    th[2 * static_cast<size_t>(v)] = pos[static_cast<size_t>(v)].x;
    th[2 * static_cast<size_t>(v) + 1] = pos[static_cast<size_t>(v)].y;
  }
  for (int c = 1; c < a.k(); ++c)
    th[static_cast<size_t>(2 * g.vertex_count() + c - 1)] = a.lengths[static_cast<size_t>(c)];

  std::vector<double> analytic;
  obj.grad(th, analytic);
  double worst = 0.0;
  const double h = 1e-6;
  for (size_t i = 0; i < th.size(); ++i) {
    std::vector<double> plus = th, minus = th;
    plus[i] += h;
    minus[i] -= h;
    double fd = (obj.eval(plus) - obj.eval(minus)) / (2.0 * h);
    double rel = std::abs(analytic[i] - fd) /
                 std::max({1.0, std::abs(analytic[i]), std::abs(fd)});
    worst = std::max(worst, rel);
  }
  return worst;
}

namespace {

struct Candidate {
  int count = 0;
  Drawing drawing;
  std::string note;
};

void consider(std::vector<Candidate>& out, ConstructionResult&& r, const std::string& note,
              const SearchOptions& opt) {
  if (!opt.allow_degenerate && r.drawing.kind != DrawingKind::Strict) return;
  auto report = verify_drawing(r.drawing, 1e-9, false);
  if (r.drawing.kind == DrawingKind::Strict && report.is_degenerate) return;
  int count = r.measured_classes;
  if (opt.unit_exclusion && count == 1) {
    // scale so the single class is unit, then demand faithfulness
    auto cls = classify_lengths(r.drawing);
    double rep = std::sqrt(cls.rep_sq.front());
    Drawing scaled = r.drawing;
    for (auto& p : scaled.pos) p = {p.x / rep, p.y / rep};
    if (!exclusion_clear(scaled, 1e-3)) return;
  }
  out.push_back({count, std::move(r.drawing), note});
}

}  // namespace

SearchResult search_min_k(const Graph& g, const SearchOptions& opt) {
  if (opt.k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  SearchResult result;
  result.seed = opt.seed;

  if (g.edge_count() == 0) {
    result.success = true;
    result.k_achieved = 0;
    Drawing d;
    d.graph = g;
    for (int v = 0; v < g.vertex_count(); ++v)
      d.pos.push_back({static_cast<double>(v), 0.0});
    result.best_drawing = std::move(d);
    result.note = "edgeless";
    return result;
  }

  std::vector<Candidate> candidates;
  try {
    if (g.is_tree()) consider(candidates, draw_tree_unit(g), "tree-unit", opt);
  } catch (const construction_error&) {
  }
  try {
    if (g.connected() && !g.is_tree() && is_k4minus_free(g).free)
      consider(candidates, draw_k4minus_free(g, opt.seed), "k4minus-free", opt);
  } catch (const construction_error&) {
  }
  if (g.is_complete() && g.vertex_count() >= 3)
    consider(candidates, draw_complete_ngon(g.vertex_count()), "ngon", opt);
  if (auto classes = g.complete_bipartition()) {
    const int m = static_cast<int>(classes->first.size());
    const int n2 = static_cast<int>(classes->second.size());
    // the library builders label class A before class B; relabel if needed
    bool canonical = true;
    for (size_t i = 0; i < classes->first.size(); ++i)
      if (classes->first[i] != static_cast<int>(i)) canonical = false;
    if (canonical) {
      try {
        if (m == 2)
          consider(candidates, draw_k2n(n2, opt.seed), "k2n", opt);
        else if (m == 3 && opt.allow_degenerate)
          consider(candidates, draw_k3n(n2), "k3n", opt);
        if (m >= 1) consider(candidates, draw_complete_bipartite_ngon(m, n2), "bipartite-ngon", opt);
      } catch (const construction_error&) {
      }
    }
  }
  consider(candidates, draw_from_ordering(g, bandwidth_ordering(g)), "ordering", opt);

  int best_count = std::numeric_limits<int>::max();
  const Candidate* best_candidate = nullptr;
  for (const auto& c : candidates)
    if (c.count < best_count) {
      best_count = c.count;
      best_candidate = &c;
    }

  if (best_candidate && best_count <= opt.k_max) {
    result.success = true;
    result.k_achieved = best_count;
    result.best_drawing = best_candidate->drawing;
    result.residual = 0.0;
    result.note = "construction:" + best_candidate->note;
  }

  // annealing over the class assignment for any smaller k
  const int k_ceiling = result.success ? std::min(opt.k_max, best_count - 1) : opt.k_max;
  const auto& edges = g.edges();
  for (int k = 1; k <= k_ceiling; ++k) {
    long long steps = std::max<long long>(opt.budget / std::max(1, k_ceiling), 4);
    std::mt19937_64 rng(mix_seed(opt.seed, 7000 + static_cast<uint64_t>(k)));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_int_distribution<int> edge_pick(0, static_cast<int>(edges.size()) - 1);
    std::uniform_int_distribution<int> class_pick(0, k - 1);

    LengthAssignment assign;
    assign.lengths.resize(static_cast<size_t>(k));
    for (int c = 0; c < k; ++c) assign.lengths[static_cast<size_t>(c)] = 1.0 + 0.45 * c;
    assign.class_of.assign(edges.size(), 0);
    if (best_candidate) {
      auto cls = classify_lengths(best_candidate->drawing);
      for (size_t e = 0; e < edges.size(); ++e)
        assign.class_of[e] = std::min(cls.class_of[e], k - 1);
    }

    SolveOptions inner;
    inner.seed = mix_seed(opt.seed, 9000 + static_cast<uint64_t>(k));
    inner.restarts = 3;
    inner.descent_iterations = 180;
    inner.polish_iterations = 40;
    inner.optimize_lengths = k > 1;
    inner.require_strict = !opt.allow_degenerate;
    inner.unit_exclusion = opt.unit_exclusion;
    inner.jobs = opt.jobs;

    auto score = [&](const LengthAssignment& a2) {
      auto sol = solve_fixed_assignment(g, a2, inner);
      result.iterations += sol.iterations;
      return sol;
    };

    auto current = assign;
    auto cur_sol = score(current);
    if (cur_sol.success) {
      result.success = true;
      result.k_achieved = k;
      result.best_drawing = cur_sol.best_drawing;
      result.residual = cur_sol.residual;
      result.note = "solver:k=" + std::to_string(k);
      break;
    }
    double temperature = std::max(cur_sol.residual, 1e-3);
    bool found = false;
    for (long long step = 1; step < steps && !found; ++step) {
      auto trial = current;
      trial.class_of[static_cast<size_t>(edge_pick(rng))] = class_pick(rng);
      auto sol = score(trial);
      if (sol.success) {
        result.success = true;
        result.k_achieved = k;
        result.best_drawing = sol.best_drawing;
        result.residual = sol.residual;
        result.note = "solver:k=" + std::to_string(k);
        found = true;
        break;
      }
      double delta = sol.residual - cur_sol.residual;
      if (delta < 0 || unif(rng) < std::exp(-delta / std::max(temperature, 1e-12))) {
        current = std::move(trial);
        cur_sol = std::move(sol);
      }
      temperature *= 0.95;
    }
    if (found) break;
  }

  // advisory density lower bound (unspecified constant taken as 1)
  if (result.k_achieved) {
    double n = g.vertex_count();
    double lower = g.edge_count() * std::pow(n, -4.0 / 3.0);
    if (static_cast<double>(*result.k_achieved) < std::ceil(lower))
      result.note += " [below density lower bound with c=1; advisory]";
  }
  return result;
}

}  // namespace fewlen
