#include "fewlen/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "fewlen/families.hpp"

namespace fewlen {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

Point rotated(const Point& p, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

void finalize(ConstructionResult& r) {
  r.measured_classes = r.drawing.graph.edge_count() > 0 ? classify_lengths(r.drawing).count() : 0;
}

// Distance from p to segment [a,b], forgiving near the endpoints: a point is
// "clear" when farther than eps from the segment, or when the segment passes
// it at a distance comparable to its endpoint gaps.
bool clear_of_segment(const Point& p, const Point& a, const Point& b, double eps) {
  double d = point_segment_distance(p, a, b);
  double cap = std::min({eps, 0.4 * dist(p, a), 0.4 * dist(p, b)});
  return d > cap;
}

int ceil_sqrt_half(int n) {
  int d = static_cast<int>(std::ceil(std::sqrt(n / 2.0)));
  while (2LL * d * d < n) ++d;
  while (d > 1 && 2LL * (d - 1) * (d - 1) >= n) --d;
  return d;
}

// Circle-pair index order: off-diagonal pairs first (they cover every radius
// within the first d-1 pairs and their intersections avoid the centre
// bisector), then the equal-radius pairs, whose two intersection points are
// forced onto the bisector of the two centres.
std::vector<std::pair<int, int>> circle_pair_order(int d) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      if (i != j) pairs.push_back({i, j});
  for (int i = 1; i <= d; ++i) pairs.push_back({i, i});
  return pairs;
}

// General position check that tolerates the one unavoidable family: for
// n > 2d(d-1)+2 some vertices must sit on the vertical bisector, and any
// three of those are collinear. No edge joins two such vertices, so they
// never put a vertex inside an edge. Triples involving a centre or an
// off-bisector vertex must still be in general position.
bool k2n_general_position(const std::vector<Point>& pts, double bisector_x, double tol) {
  auto on_bisector = [&](const Point& p) { return std::abs(p.x - bisector_x) <= 1e-12; };
  const size_t n = pts.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (squared_dist(pts[i], pts[j]) < 1e-12) return false;
      for (size_t k = j + 1; k < n; ++k) {
        if (on_bisector(pts[i]) && on_bisector(pts[j]) && on_bisector(pts[k])) continue;
        double ux = pts[j].x - pts[i].x, uy = pts[j].y - pts[i].y;
        double vx = pts[k].x - pts[i].x, vy = pts[k].y - pts[i].y;
        double cr = ux * vy - uy * vx;
        if (std::abs(cr) <= tol * std::sqrt((ux * ux + uy * uy) * (vx * vx + vy * vy)))
          return false;
      }
    }
  return true;
}

}  // namespace

ConstructionResult draw_complete_ngon(int n) {
  if (n < 3) throw std::invalid_argument("regular polygon drawing needs n >= 3");
  ConstructionResult r;
  r.lemma_tag = "ngon";
  r.claimed_bound = n / 2;
  r.drawing.graph = make_complete(n);
  r.drawing.kind = DrawingKind::Strict;
  for (int i = 0; i < n; ++i)
    r.drawing.pos.push_back({std::cos(kTwoPi * i / n), std::sin(kTwoPi * i / n)});
  finalize(r);
  return r;
}

ConstructionResult draw_complete_bipartite_ngon(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("complete bipartite drawing needs m, n >= 1");
  if (m > n) std::swap(m, n);
  ConstructionResult r;
  r.lemma_tag = "bipartite-ngon";
  r.claimed_bound = (n + 1) / 2;
  r.drawing.graph = make_complete_bipartite(m, n);
  r.drawing.kind = DrawingKind::Strict;
  const int gon = 2 * n;
  auto at = [&](int slot) {
    return Point{std::cos(kTwoPi * slot / gon), std::sin(kTwoPi * slot / gon)};
  };
  for (int j = 0; j < m; ++j) r.drawing.pos.push_back(at(2 * j));      // class A, even slots
  for (int j = 0; j < n; ++j) r.drawing.pos.push_back(at(2 * j + 1));  // class B, odd slots
  finalize(r);
  return r;
}

ConstructionResult draw_k2n(int n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("K_{2,n} drawing needs n >= 1");
  const int d = ceil_sqrt_half(n);
  ConstructionResult r;
  r.lemma_tag = "k2n";
  r.claimed_bound = d;
  r.metrics["d"] = d;
  r.drawing.graph = make_complete_bipartite(2, n);
  r.drawing.kind = DrawingKind::Strict;

  const Point v{-1.0, 0.0}, w{1.0, 0.0};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(0.0, 1.0 / (2.0 * (d + 1)));
  const auto pairs = circle_pair_order(d);

  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<double> radius(static_cast<size_t>(d + 1), 0.0);
    for (int i = 1; i <= d; ++i) radius[static_cast<size_t>(i)] = 1.0 + (i + jitter(rng)) / (d + 1);

    std::vector<Point> b_points;
    for (const auto& [i, j] : pairs) {
      if (static_cast<int>(b_points.size()) >= n) break;
      double a = radius[static_cast<size_t>(i)], b = radius[static_cast<size_t>(j)];
      double x = (a * a - b * b) / 4.0;
      double y2 = a * a - (x + 1.0) * (x + 1.0);
      if (y2 <= 0) break;  // tangent circles; resample
      double y = std::sqrt(y2);
      b_points.push_back({x, y});
      if (static_cast<int>(b_points.size()) < n) b_points.push_back({x, -y});
    }
    if (static_cast<int>(b_points.size()) < n) continue;

    std::vector<Point> all{v, w};
    all.insert(all.end(), b_points.begin(), b_points.end());
    if (!k2n_general_position(all, 0.0, 1e-9)) continue;

    int bisector = 0;
    for (const auto& p : b_points)
      if (std::abs(p.x) <= 1e-12) ++bisector;
    r.metrics["bisector_points"] = bisector;
    r.drawing.pos = std::move(all);
    finalize(r);
    return r;
  }
  throw construction_error("K_{2,n} radius sampling exhausted (seed " + std::to_string(seed) +
                           ", n " + std::to_string(n) + ")");
}

ConstructionResult draw_k3n(int n) {
  if (n < 1) throw std::invalid_argument("K_{3,n} drawing needs n >= 1");
  const int d = ceil_sqrt_half(n);
  ConstructionResult r;
  r.lemma_tag = "k3n";
  r.claimed_bound = 3 * d - 1;
  r.metrics["d"] = d;
  r.drawing.graph = make_complete_bipartite(3, n);
  r.drawing.kind = DrawingKind::DegenerateAllowed;
  r.drawing.pos = {{-1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}};

  auto radius_sq = [&](int i) { return 1.0 + static_cast<double>(i) / (d + 1); };
  std::set<long long> middle_sums;
  int placed = 0;
  for (const auto& [i, j] : circle_pair_order(d)) {
    if (placed >= n) break;
    double x = (radius_sq(i) - radius_sq(j)) / 4.0;
    double y = std::sqrt(radius_sq(i) - (x + 1.0) * (x + 1.0));
    middle_sums.insert(i + j);
    r.drawing.pos.push_back({x, y});
    if (++placed < n) {
      r.drawing.pos.push_back({x, -y});
      ++placed;
    }
  }
  r.metrics["middle_distance_values"] = static_cast<double>(middle_sums.size());
  finalize(r);
  return r;
}

// ---------------------------------------------------------------------------
// Unit tree drawing.
//
// Vertices are inserted leaf-by-leaf. The key invariant, kept from the
// inductive proof idea, is that the open region below the segment joining two
// x-consecutive placed vertices (and the half-planes beyond the extremes)
// contains no part of the drawing, and that no part of the drawing lies
// vertically below any vertex. A new leaf goes on the unit circle around its
// parent, inside such a region, at a spot that keeps every invariant and
// avoids unit distances to non-parents.
// ---------------------------------------------------------------------------

namespace {

struct TreePlacerMargins {
  double unit = 1e-6;        // forbidden band around non-adjacent unit distance
  double coincide = 1e-3;    // min distance to other vertices
  double edge_clear = 1e-4;  // min distance to non-incident edges
  double x_distinct = 1e-9;
  double ray = 1e-9;
};

class TreePlacer {
public:
  explicit TreePlacer(const Graph& t) : tree_(t), pos_(t.vertex_count()),
                                        placed_(t.vertex_count(), 0) {}

  std::vector<Point> run() {
    const int n = tree_.vertex_count();
    place(0, {0.0, 0.0});
    if (n == 1) return pos_;
    // BFS order guarantees the parent is placed first
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<int> order;
    std::queue<int> q;
    q.push(0);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[0] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (int w : tree_.neighbors(v))
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          parent[static_cast<size_t>(w)] = v;
          q.push(w);
        }
    }
    for (size_t idx = 1; idx < order.size(); ++idx) insert_leaf(order[idx], parent[static_cast<size_t>(order[idx])]);
    return pos_;
  }

private:
  void place(int v, Point p) {
    pos_[static_cast<size_t>(v)] = p;
    placed_[static_cast<size_t>(v)] = 1;
    auto it = std::lower_bound(by_x_.begin(), by_x_.end(), std::make_pair(p.x, v));
    by_x_.insert(it, {p.x, v});
  }

  void insert_leaf(int v, int p) {
    if (by_x_.size() == 1) {
      Point q{pos_[static_cast<size_t>(p)].x + std::sin(1.0),
              pos_[static_cast<size_t>(p)].y - std::cos(1.0)};
      place(v, q);
      edges_.push_back({p, v});
      return;
    }
    auto arcs = candidate_arcs(p, 48);

    // First choose for spread: among a coarse candidate pool, take the valid
    // spot farthest from the existing vertices. Greedily taking the first
    // valid spot funnels subtrees into ever-narrower gaps until the layout
    // collapses numerically.
    TreePlacerMargins strict;
    {
      Point best{};
      double best_score = -1.0;
      size_t arc_budget = std::min<size_t>(arcs.size(), 16);
      for (size_t a = 0; a < arc_budget; ++a) {
        const auto& [lo, hi] = arcs[a];
        for (double frac : {0.5, 0.25, 0.75}) {
          Point q = on_unit_circle(p, lo + (hi - lo) * frac);
          if (!valid(q, p, strict)) continue;
          double score = clearance(q);
          if (score > best_score) {
            best_score = score;
            best = q;
          }
        }
      }
      if (best_score > 0) {
        place(v, best);
        edges_.push_back({p, v});
        return;
      }
    }

    // fall back to exhaustive dyadic sweeps with progressively smaller margins
    TreePlacerMargins relaxed;
    relaxed.coincide = 1e-6;
    relaxed.edge_clear = 1e-6;
    TreePlacerMargins last_resort = relaxed;
    last_resort.unit = 5e-8;
    for (const auto& margins : {strict, relaxed, last_resort}) {
      long budget = 20000;
      for (const auto& [lo, hi] : arcs) {
        for (int depth = 1; depth <= 13 && budget > 0; ++depth) {
          for (int k = 1; k < (1 << depth) && budget > 0; k += 2) {
            --budget;
            double phi = lo + (hi - lo) * (static_cast<double>(k) / (1 << depth));
            Point q = on_unit_circle(p, phi);
            if (valid(q, p, margins)) {
              place(v, q);
              edges_.push_back({p, v});
              return;
            }
          }
        }
        if (budget <= 0) break;
      }
    }
    throw construction_error("tree placement failed for vertex " + std::to_string(v));
  }

  double clearance(const Point& q) const {
    double best = std::numeric_limits<double>::infinity();
    for (size_t u = 0; u < pos_.size(); ++u)
      if (placed_[u]) best = std::min(best, squared_dist(q, pos_[u]));
    return best;
  }

  Point on_unit_circle(int p, double phi) const {
    const Point& c = pos_[static_cast<size_t>(p)];
    return {c.x + std::sin(phi), c.y - std::cos(phi)};
  }

  // Region r covers x between by_x_[r-1] and by_x_[r]; r = 0 and r = size()
  // are the half-planes beyond the extremes.
  bool inside_region(const Point& q, size_t r) const {
    const size_t k = by_x_.size();
    if (r == 0) return q.x < by_x_.front().first;
    if (r == k) return q.x > by_x_.back().first;
    const auto& [xl, vl] = by_x_[r - 1];
    const auto& [xr, vr] = by_x_[r];
    if (!(q.x > xl && q.x < xr)) return false;
    const Point& a = pos_[static_cast<size_t>(vl)];
    const Point& b = pos_[static_cast<size_t>(vr)];
    double t = (q.x - a.x) / (b.x - a.x);
    return q.y < a.y + t * (b.y - a.y);
  }

  // Angle windows where sin(phi) lies in (lo, hi); phi measured from straight
  // down. Three monotone branches of sin cover (-pi, pi].
  static void sin_windows(double lo, double hi,
                          std::vector<std::pair<double, double>>& out) {
    lo = std::max(lo, -1.0);
    hi = std::min(hi, 1.0);
    if (hi - lo <= 1e-15) return;
    double alo = std::asin(lo), ahi = std::asin(hi);
    out.push_back({alo, ahi});  // lower branch
    if (hi > 0) {
      double top = std::asin(std::max(lo, 0.0));
      out.push_back({M_PI - ahi, M_PI - top});  // upper branch, right side
    }
    if (lo < 0) {
      double bottom = std::asin(std::max(-hi, 0.0));
      out.push_back({-M_PI + bottom, -M_PI + std::asin(-lo)});  // upper, left
    }
  }

  std::vector<std::pair<double, double>> candidate_arcs(int p, int samples) const {
    const Point& c = pos_[static_cast<size_t>(p)];
    std::vector<std::pair<double, double>> arcs;
    const size_t regions = by_x_.size() + 1;
    for (size_t r = 0; r < regions; ++r) {
      double lo = (r == 0) ? -2.0 : by_x_[r - 1].first - c.x;
      double hi = (r == by_x_.size()) ? 2.0 : by_x_[r].first - c.x;
      if (lo >= 1.0 || hi <= -1.0) continue;  // unreachable from the circle

      std::vector<std::pair<double, double>> windows;
      sin_windows(lo, hi, windows);
      const bool half_plane = (r == 0 || r == by_x_.size());
      for (auto [wlo, whi] : windows) {
        if (whi - wlo <= 1e-12) continue;
        if (half_plane) {
          arcs.push_back({wlo, whi});  // no upper boundary to respect
          continue;
        }
        // scan the window for the stretch below the bounding segment
        int prev_state = -1;
        double prev_phi = wlo;
        double run_start = wlo;
        bool open_run = false;
        for (int s = 0; s < samples; ++s) {
          double phi = wlo + (whi - wlo) * (s + 0.5) / samples;
          bool in = inside_region(on_unit_circle(p, phi), r);
          if (in && !open_run) {
            run_start = (prev_state == 0) ? refine_boundary(p, r, prev_phi, phi) : phi;
            open_run = true;
          } else if (!in && open_run) {
            double run_end = refine_boundary(p, r, phi, prev_phi);
            if (run_end > run_start + 1e-12) arcs.push_back({run_start, run_end});
            open_run = false;
          }
          prev_state = in ? 1 : 0;
          prev_phi = phi;
        }
        if (open_run && prev_phi > run_start + 1e-12) arcs.push_back({run_start, prev_phi});
      }
    }
    std::sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) {
      double la = a.second - a.first, lb = b.second - b.first;
      if (la != lb) return la > lb;
      return a.first < b.first;
    });
    return arcs;
  }

  // bisect between an outside angle and an inside angle
  double refine_boundary(int p, size_t r, double outside, double inside) const {
    for (int it = 0; it < 40; ++it) {
      double mid = 0.5 * (outside + inside);
      if (inside_region(on_unit_circle(p, mid), r))
        inside = mid;
      else
        outside = mid;
    }
    return inside;
  }

  bool valid(const Point& q, int p, const TreePlacerMargins& m) const {
    const Point& pp = pos_[static_cast<size_t>(p)];
    const int n = tree_.vertex_count();
    for (int u = 0; u < n; ++u) {
      if (!placed_[static_cast<size_t>(u)]) continue;
      const Point& pu = pos_[static_cast<size_t>(u)];
      if (std::abs(q.x - pu.x) <= m.x_distinct) return false;
      if (u == p) continue;
      double duq = dist(pu, q);
      if (duq <= m.coincide) return false;
      if (std::abs(duq - 1.0) <= m.unit) return false;
      if (!clear_of_segment(pu, pp, q, m.edge_clear)) return false;
      // the new edge must stay strictly above every vertex it passes over
      if ((pu.x - pp.x) * (pu.x - q.x) < 0) {
        double t = (pu.x - pp.x) / (q.x - pp.x);
        double y_on = pp.y + t * (q.y - pp.y);
        if (y_on <= pu.y + m.ray) return false;
      }
    }
    for (const auto& [a, b] : edges_) {
      const Point& pa = pos_[static_cast<size_t>(a)];
      const Point& pb = pos_[static_cast<size_t>(b)];
      if (!clear_of_segment(q, pa, pb, m.edge_clear)) return false;
      if (a != p && b != p && segments_cross(pp, q, pa, pb)) return false;
      // no existing edge may pass under the new vertex
      if ((pa.x - q.x) * (pb.x - q.x) < 0) {
        double t = (q.x - pa.x) / (pb.x - pa.x);
        double y_on = pa.y + t * (pb.y - pa.y);
        if (y_on <= q.y + m.ray) return false;
      }
    }
    return true;
  }

  const Graph& tree_;
  std::vector<Point> pos_;
  std::vector<char> placed_;
  std::vector<std::pair<double, int>> by_x_;  // sorted by x-coordinate
  std::vector<Graph::Edge> edges_;
};

}  // namespace

ConstructionResult draw_tree_unit(const Graph& t) {
  if (!t.is_tree()) throw std::invalid_argument("draw_tree_unit needs a tree");
  ConstructionResult r;
  r.lemma_tag = "tree-unit";
  r.claimed_bound = 1;
  r.drawing.graph = t;
  r.drawing.kind = DrawingKind::Strict;
  r.drawing.pos = TreePlacer(t).run();
  finalize(r);
  return r;
}

Drawing paste_drawings(const Drawing& d1, int v1, const Drawing& d2, int v2,
                       bool unit_faithful, std::mt19937_64& rng) {
  const int n1 = d1.graph.vertex_count();
  const int n2 = d2.graph.vertex_count();
  if (v1 < 0 || v1 >= n1 || v2 < 0 || v2 >= n2)
    throw std::invalid_argument("paste vertex out of range");

  std::vector<int> map2(static_cast<size_t>(n2), -1);
  int next = n1;
  for (int w = 0; w < n2; ++w) map2[static_cast<size_t>(w)] = (w == v2) ? v1 : next++;

  std::vector<Graph::Edge> edges = d1.graph.edges();
  for (const auto& [a, b] : d2.graph.edges())
    edges.emplace_back(map2[static_cast<size_t>(a)], map2[static_cast<size_t>(b)]);
  Graph joined(n1 + n2 - 1, std::move(edges));

  const Point anchor = d1.pos[static_cast<size_t>(v1)];
  std::vector<Point> rel(static_cast<size_t>(n2));
  for (int w = 0; w < n2; ++w)
    rel[static_cast<size_t>(w)] = {d2.pos[static_cast<size_t>(w)].x - d2.pos[static_cast<size_t>(v2)].x,
                                   d2.pos[static_cast<size_t>(w)].y - d2.pos[static_cast<size_t>(v2)].y};

  const double scale = std::max({drawing_diameter(d1), drawing_diameter(d2), 1.0});
  const double coincide = 1e-7 * scale;
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    double theta = angle(rng);
    std::vector<Point> pos(static_cast<size_t>(n1 + n2 - 1));
    for (int a = 0; a < n1; ++a) pos[static_cast<size_t>(a)] = d1.pos[static_cast<size_t>(a)];
    for (int w = 0; w < n2; ++w) {
      Point q = rotated(rel[static_cast<size_t>(w)], theta);
      pos[static_cast<size_t>(map2[static_cast<size_t>(w)])] = {anchor.x + q.x, anchor.y + q.y};
    }

    bool ok = true;
    for (int a = 0; ok && a < n1; ++a) {
      if (a == v1) continue;
      for (int w = 0; ok && w < n2; ++w) {
        if (w == v2) continue;
        int b = map2[static_cast<size_t>(w)];
        double dd = dist(pos[static_cast<size_t>(a)], pos[static_cast<size_t>(b)]);
        if (dd <= coincide) ok = false;
        if (unit_faithful && std::abs(dd - 1.0) <= 1e-6) ok = false;
      }
    }
    // cross vertex-on-edge checks in both directions
    for (const auto& [a, b] : d1.graph.edges()) {
      if (!ok) break;
      for (int w = 0; ok && w < n2; ++w) {
        if (w == v2) continue;
        if (!clear_of_segment(pos[static_cast<size_t>(map2[static_cast<size_t>(w)])],
                              pos[static_cast<size_t>(a)], pos[static_cast<size_t>(b)],
                              1e-6 * scale))
          ok = false;
      }
    }
    for (const auto& [a2, b2] : d2.graph.edges()) {
      if (!ok) break;
      int a = map2[static_cast<size_t>(a2)], b = map2[static_cast<size_t>(b2)];
      for (int u = 0; ok && u < n1; ++u) {
        if (u == v1) continue;
        if (!clear_of_segment(pos[static_cast<size_t>(u)], pos[static_cast<size_t>(a)],
                              pos[static_cast<size_t>(b)], 1e-6 * scale))
          ok = false;
      }
    }
    if (!ok) continue;

    Drawing out;
    out.graph = std::move(joined);
    out.pos = std::move(pos);
    out.kind = DrawingKind::Strict;
    return out;
  }
  throw construction_error("pasting rotation budget exhausted after 1000 samples");
}

namespace {

// Cycle order of a block whose every vertex has degree 2, starting at `from`.
std::vector<int> block_ring(const Block& block, int from) {
  std::map<int, std::vector<int>> adj;
  for (const auto& [a, b] : block.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> ring{from};
  int prev = -1, cur = from;
  while (true) {
    auto& nbrs = adj[cur];
    std::sort(nbrs.begin(), nbrs.end());
    int nxt = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
    if (nxt == from) break;
    ring.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  return ring;
}

}  // namespace

ConstructionResult draw_k4minus_free(const Graph& g, uint64_t seed) {
  if (!g.connected()) throw std::invalid_argument("draw_k4minus_free needs a connected graph");
  auto rec = is_k4minus_free(g);
  if (!rec.free)
    throw std::invalid_argument(
        "graph has a K4-minus-an-edge minor; witness vertex of degree >= 3 in a non-cycle "
        "block: " +
        std::to_string(rec.witness));

  ConstructionResult r;
  r.lemma_tag = "k4minus-free";
  r.claimed_bound = 1;
  r.drawing.graph = g;
  r.drawing.kind = DrawingKind::Strict;
  r.drawing.pos.assign(static_cast<size_t>(g.vertex_count()), {0.0, 0.0});

  const int n = g.vertex_count();
  std::vector<char> placed(static_cast<size_t>(n), 0);
  std::vector<Graph::Edge> placed_edges;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);

  auto decomp = block_decomposition(g);
  r.metrics["blocks"] = static_cast<double>(decomp.blocks.size());
  if (decomp.blocks.empty()) {  // single vertex
    placed[0] = 1;
  }

  for (const auto& block : decomp.blocks) {
    int anchor = -1;
    for (int v : block.vertices)
      if (placed[static_cast<size_t>(v)]) {
        if (anchor != -1) throw std::logic_error("block shares two placed vertices");
        anchor = v;
      }
    bool first = anchor == -1;
    if (first) anchor = block.vertices.front();

    // local coordinates with the anchor at the origin, unit edge lengths
    std::vector<std::pair<int, Point>> local;
    if (block.is_edge()) {
      int other = block.edges[0].first == anchor ? block.edges[0].second : block.edges[0].first;
      local = {{anchor, {0.0, 0.0}}, {other, {1.0, 0.0}}};
    } else {
      auto ring = block_ring(block, anchor);
      const int k = static_cast<int>(ring.size());
      const double radius = 0.5 / std::sin(M_PI / k);
      for (int t = 0; t < k; ++t)
        local.push_back({ring[static_cast<size_t>(t)],
                         {radius * (std::cos(kTwoPi * t / k) - 1.0),
                          radius * std::sin(kTwoPi * t / k)}});
    }

    const Point base = first ? Point{0.0, 0.0} : r.drawing.pos[static_cast<size_t>(anchor)];
    bool done = false;
    for (int attempt = 0; attempt < 1000 && !done; ++attempt) {
      double theta = angle(rng);
      std::vector<std::pair<int, Point>> world;
      for (const auto& [v, q] : local) {
        Point rq = rotated(q, theta);
        world.push_back({v, {base.x + rq.x, base.y + rq.y}});
      }

      bool ok = true;
      for (const auto& [v, q] : world) {
        if (v == anchor) continue;
        for (int u = 0; ok && u < n; ++u) {
          if (!placed[static_cast<size_t>(u)] || u == anchor) continue;
          double dd = dist(q, r.drawing.pos[static_cast<size_t>(u)]);
          if (dd <= 1e-7) ok = false;
          if (std::abs(dd - 1.0) <= 1e-6) ok = false;  // keeps adjacency faithful
        }
        for (const auto& [a, b] : placed_edges) {
          if (!ok) break;
          if (!clear_of_segment(q, r.drawing.pos[static_cast<size_t>(a)],
                                r.drawing.pos[static_cast<size_t>(b)], 1e-6))
            ok = false;
        }
        if (!ok) break;
      }
      // placed vertices against the new block's edges
      std::map<int, Point> world_pos;
      for (const auto& [v, q] : world) world_pos[v] = q;
      for (const auto& [a, b] : block.edges) {
        if (!ok) break;
        for (int u = 0; ok && u < n; ++u) {
          if (!placed[static_cast<size_t>(u)] || u == anchor) continue;
          if (!clear_of_segment(r.drawing.pos[static_cast<size_t>(u)], world_pos[a], world_pos[b],
                                1e-6))
            ok = false;
        }
      }
      if (!ok) continue;

      for (const auto& [v, q] : world) {
        r.drawing.pos[static_cast<size_t>(v)] = q;
        placed[static_cast<size_t>(v)] = 1;
      }
      for (const auto& e : block.edges) placed_edges.push_back(e);
      done = true;
    }
    if (!done)
      throw construction_error("block gluing rotation budget exhausted (seed " +
                               std::to_string(seed) + ")");
  }
  finalize(r);
  return r;
}

ConstructionResult draw_from_ordering(const Graph& g, const VertexOrdering& ord) {
  if (!ord.valid_for(g)) throw std::invalid_argument("ordering is not a bijection onto 1..n");
  const int n = g.vertex_count();
  ConstructionResult r;
  r.lemma_tag = "ordering";
  r.claimed_bound = ordering_cyclic_width(g, ord);
  r.drawing.graph = g;
  r.drawing.kind = DrawingKind::Strict;
  for (int v = 0; v < n; ++v) {
    double a = kTwoPi * ord.sigma[static_cast<size_t>(v)] / n;
    r.drawing.pos.push_back({std::cos(a), std::sin(a)});
  }
  finalize(r);
  return r;
}

ConstructionResult draw_h_partition(const Graph& g, const HPartition& part,
                                    const Drawing& h_drawing, uint64_t seed) {
  validate_hpartition(g, part);
  if (h_drawing.graph.vertex_count() != static_cast<int>(part.parts.size()) ||
      h_drawing.graph.edges() != part.quotient.edges())
    throw std::invalid_argument("h_drawing does not draw the partition quotient");

  const int w = part.width();
  const int s = count_slope_classes(h_drawing);
  const int l = h_drawing.graph.edge_count() > 0 ? classify_lengths(h_drawing).count() : 0;

  ConstructionResult r;
  r.lemma_tag = "h-partition";
  r.claimed_bound = s * l * w * (w - 1) + w / 2 + l;
  r.metrics["w"] = w;
  r.metrics["s"] = s;
  r.metrics["l"] = l;
  r.drawing.graph = g;
  r.drawing.kind = DrawingKind::Strict;

  double min_feature = std::numeric_limits<double>::infinity();
  const int t = static_cast<int>(part.parts.size());
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      min_feature = std::min(min_feature, dist(h_drawing.pos[static_cast<size_t>(i)],
                                               h_drawing.pos[static_cast<size_t>(j)]));
  for (const auto& [a, b] : h_drawing.graph.edges())
    for (int u = 0; u < t; ++u)
      if (u != a && u != b)
        min_feature = std::min(
            min_feature, point_segment_distance(h_drawing.pos[static_cast<size_t>(u)],
                                                h_drawing.pos[static_cast<size_t>(a)],
                                                h_drawing.pos[static_cast<size_t>(b)]));
  if (t == 1) min_feature = 1.0;
  if (!(min_feature > 0)) throw std::invalid_argument("h_drawing is degenerate");

  std::vector<Point> gon(static_cast<size_t>(w), Point{0.0, 0.0});
  if (w >= 2)
    for (int q = 0; q < w; ++q)
      gon[static_cast<size_t>(q)] = {std::cos(kTwoPi * q / w), std::sin(kTwoPi * q / w)};

  // slot of each vertex inside its (sorted) part
  std::vector<int> owner = part.part_of(g.vertex_count());
  std::vector<int> slot(static_cast<size_t>(g.vertex_count()), 0);
  for (const auto& p : part.parts) {
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) slot[static_cast<size_t>(sorted[i])] = static_cast<int>(i);
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  double rho = min_feature / (4.0 * w);
  for (int halving = 0; halving <= 40; ++halving, rho *= 0.5) {
    for (int attempt = 0; attempt < 25; ++attempt) {
      double phi = angle(rng);
      r.drawing.pos.assign(static_cast<size_t>(g.vertex_count()), {0.0, 0.0});
      for (int v = 0; v < g.vertex_count(); ++v) {
        Point off = rotated(gon[static_cast<size_t>(slot[static_cast<size_t>(v)])], phi);
        const Point& c = h_drawing.pos[static_cast<size_t>(owner[static_cast<size_t>(v)])];
        r.drawing.pos[static_cast<size_t>(v)] = {c.x + rho * off.x, c.y + rho * off.y};
      }
      auto report = verify_drawing(r.drawing, 1e-8, false);
      if (!report.is_degenerate) {
        r.metrics["scale"] = rho;
        r.metrics["rotation"] = phi;
        finalize(r);
        return r;
      }
    }
  }
  throw construction_error("h-partition scale/rotation budget exhausted (seed " +
                           std::to_string(seed) + ")");
}

// ---------------------------------------------------------------------------
// Few-slope few-length tree drawing.
// ---------------------------------------------------------------------------

namespace {

struct PathComp {
  std::vector<int> path;
  std::vector<std::vector<int>> children;  // child component ids per path index
  int level = 1;
};

struct TreeDecomposition {
  std::vector<PathComp> comps;
  int depth = 1;
  int max_children = 0;
};

// BFS restricted to unassigned vertices; returns (farthest vertex, parents).
std::pair<int, std::vector<int>> far_bfs(const Graph& t, int start,
                                         const std::vector<char>& assigned) {
  std::vector<int> parent(static_cast<size_t>(t.vertex_count()), -2);
  std::queue<int> q;
  q.push(start);
  parent[static_cast<size_t>(start)] = -1;
  int far = start;
  std::vector<int> dist(static_cast<size_t>(t.vertex_count()), 0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (std::make_pair(dist[static_cast<size_t>(v)], -v) >
        std::make_pair(dist[static_cast<size_t>(far)], -far))
      far = v;
    for (int u : t.neighbors(v))
      if (!assigned[static_cast<size_t>(u)] && parent[static_cast<size_t>(u)] == -2) {
        parent[static_cast<size_t>(u)] = v;
        dist[static_cast<size_t>(u)] = dist[static_cast<size_t>(v)] + 1;
        q.push(u);
      }
  }
  return {far, parent};
}

TreeDecomposition decompose_tree(const Graph& t) {
  TreeDecomposition out;
  std::vector<char> assigned(static_cast<size_t>(t.vertex_count()), 0);

  struct Job {
    int root;       // designated start, or -1 for the top component
    int level;
  };
  std::vector<Job> jobs{{-1, 1}};
  std::vector<int> job_comp_slot{0};  // index into out.comps reserved for the job
  out.comps.emplace_back();

  for (size_t j = 0; j < jobs.size(); ++j) {
    auto [root, level] = jobs[j];
    int start;
    if (root < 0) {
      auto [a, pa] = far_bfs(t, 0, assigned);
      start = a;
    } else {
      start = root;
    }
    auto [b, parent] = far_bfs(t, start, assigned);
    std::vector<int> path;
    for (int v = b; v != -1; v = parent[static_cast<size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());  // path[0] == start

    PathComp comp;
    comp.level = level;
    comp.path = path;
    comp.children.resize(path.size());
    for (int v : path) assigned[static_cast<size_t>(v)] = 1;
    for (size_t k = 0; k < path.size(); ++k) {
      for (int wv : t.neighbors(path[k])) {
        if (assigned[static_cast<size_t>(wv)]) continue;
        // one child component per hanging neighbour (a tree attaches each
        // hanging subtree through exactly one edge); claim its root
        int comp_id = static_cast<int>(out.comps.size());
        out.comps.emplace_back();
        comp.children[k].push_back(comp_id);
        jobs.push_back({wv, level + 1});
        job_comp_slot.push_back(comp_id);
        assigned[static_cast<size_t>(wv)] = 1;
      }
      out.max_children = std::max(out.max_children, static_cast<int>(comp.children[k].size()));
    }
    out.depth = std::max(out.depth, level);
    out.comps[static_cast<size_t>(job_comp_slot[j])] = std::move(comp);
  }
  return out;
}

}  // namespace

ConstructionResult draw_tree_bounded(const Graph& t) {
  if (!t.is_tree()) throw std::invalid_argument("draw_tree_bounded needs a tree");
  ConstructionResult r;
  r.lemma_tag = "tree-bounded";
  r.drawing.graph = t;
  r.drawing.kind = DrawingKind::Strict;
  r.drawing.pos.assign(static_cast<size_t>(t.vertex_count()), {0.0, 0.0});

  auto dec = decompose_tree(t);
  const int p = dec.depth;
  const int slots = std::max(dec.max_children, 1);
  const double delta = (M_PI / 2.0) / slots;
  const double kb = 0.5;                       // connector length / path spacing
  const double kr = 0.45 * std::sin(delta / 2.0);  // child disk radius / connector

  std::vector<double> alpha(static_cast<size_t>(slots));
  for (int s = 0; s < slots; ++s) alpha[static_cast<size_t>(s)] = -0.75 * M_PI + (s + 0.5) * delta;

  // extents per level, in that level's path-spacing units, bottom-up
  std::vector<double> max_len(static_cast<size_t>(p + 2), 0.0);
  std::vector<char> has_children(static_cast<size_t>(p + 2), 0);
  for (const auto& c : dec.comps) {
    max_len[static_cast<size_t>(c.level)] =
        std::max(max_len[static_cast<size_t>(c.level)], static_cast<double>(c.path.size()));
    for (const auto& ch : c.children)
      if (!ch.empty()) has_children[static_cast<size_t>(c.level)] = 1;
  }
  std::vector<double> extent(static_cast<size_t>(p + 2), 0.0);
  for (int lv = p; lv >= 1; --lv)
    extent[static_cast<size_t>(lv)] = (max_len[static_cast<size_t>(lv)] - 1.0) +
                                      (has_children[static_cast<size_t>(lv)] ? kb * (1.0 + kr) : 0.0);
  std::vector<double> a(static_cast<size_t>(p + 2), 1.0), b(static_cast<size_t>(p + 2), 0.0);
  for (int lv = 1; lv <= p; ++lv) {
    if (lv > 1)
      a[static_cast<size_t>(lv)] = a[static_cast<size_t>(lv - 1)] * kb * kr /
                                   std::max(extent[static_cast<size_t>(lv)], 1.0);
    b[static_cast<size_t>(lv)] = kb * a[static_cast<size_t>(lv)];
  }

  // top-down placement
  struct Item {
    int comp;
    Point anchor;
  };
  std::vector<Item> stack{{0, {0.0, 0.0}}};
  while (!stack.empty()) {
    auto [ci, anchor] = stack.back();
    stack.pop_back();
    const auto& comp = dec.comps[static_cast<size_t>(ci)];
    const double step = a[static_cast<size_t>(comp.level)];
    const double conn = b[static_cast<size_t>(comp.level)];
    for (size_t k = 0; k < comp.path.size(); ++k) {
      Point u{anchor.x + static_cast<double>(k) * step, anchor.y};
      r.drawing.pos[static_cast<size_t>(comp.path[k])] = u;
      for (size_t cidx = 0; cidx < comp.children[k].size(); ++cidx) {
        double ang = alpha[cidx];
        stack.push_back({comp.children[k][cidx],
                         {u.x + conn * std::cos(ang), u.y + conn * std::sin(ang)}});
      }
    }
  }

  r.claimed_bound = std::max(2 * p - 1, 1);
  r.metrics["pw_est"] = p;
  r.metrics["slopes"] = count_slope_classes(r.drawing);
  r.metrics["slope_target"] = std::max(t.max_degree() - 1, 1);
  r.metrics["length_target"] = 2 * p - 1;
  finalize(r);

  auto report = verify_drawing(r.drawing, 1e-9, false);
  if (report.is_degenerate)
    throw construction_error("tree-bounded layout failed a strictness self-check");
  return r;
}

ConstructionResult draw_treewidth_pipeline(const Graph& g, uint64_t seed) {
  auto part = tree_partition(g);
  auto tdraw = draw_tree_bounded(part.quotient);
  auto r = draw_h_partition(g, part, tdraw.drawing, seed);
  r.lemma_tag = "treewidth-pipeline";
  r.metrics["pw_est"] = tdraw.metrics.at("pw_est");
  const double n = g.vertex_count();
  const double w = part.width();
  const double logterm = 2.0 * std::log2(2.0 * n + 1.0) - 1.0;
  const double maxdeg = g.max_degree();
  r.metrics["formula_bound"] =
      (maxdeg * w - 1.0) * logterm * w * (w - 1.0) + std::floor(w / 2.0) + logterm;
  return r;
}

ConstructionResult draw_cartesian_product(const Drawing& dg, const Drawing& dh, uint64_t seed) {
  const int ng = dg.graph.vertex_count();
  const int nh = dh.graph.vertex_count();
  if (ng == 0 || nh == 0) throw std::invalid_argument("product factors must be non-empty");

  int cg = dg.graph.edge_count() > 0 ? classify_lengths(dg).count() : 0;
  int ch = dh.graph.edge_count() > 0 ? classify_lengths(dh).count() : 0;
  double scale = 1.0;
  if (cg > 0 && ch > 0)
    scale = std::sqrt(classify_lengths(dg).rep_sq.back() / classify_lengths(dh).rep_sq.back());

  ConstructionResult r;
  r.lemma_tag = "cartesian-product";
  r.claimed_bound = cg + ch - ((cg > 0 && ch > 0) ? 1 : 0);
  r.metrics["scale"] = scale;
  r.drawing.graph = cartesian_product(dg.graph, dh.graph);
  r.drawing.kind = DrawingKind::Strict;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    double alpha = angle(rng);
    r.drawing.pos.assign(static_cast<size_t>(ng * nh), {0.0, 0.0});
    for (int v = 0; v < ng; ++v)
      for (int w = 0; w < nh; ++w) {
        Point q = rotated({scale * dh.pos[static_cast<size_t>(w)].x,
                           scale * dh.pos[static_cast<size_t>(w)].y},
                          alpha);
        r.drawing.pos[static_cast<size_t>(v * nh + w)] = {dg.pos[static_cast<size_t>(v)].x + q.x,
                                                          dg.pos[static_cast<size_t>(v)].y + q.y};
      }
    auto report = verify_drawing(r.drawing, 1e-8, false);
    if (!report.is_degenerate) {
      r.metrics["rotation"] = alpha;
      finalize(r);
      return r;
    }
  }
  throw construction_error("cartesian product rotation budget exhausted (seed " +
                           std::to_string(seed) + ")");
}

}  // namespace fewlen
