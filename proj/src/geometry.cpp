#include "fewlen/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fewlen {

std::string to_string(DrawingKind kind) {
  return kind == DrawingKind::Strict ? "strict" : "degenerate-allowed";
}

DrawingKind drawing_kind_from_string(const std::string& s) {
  if (s == "strict") return DrawingKind::Strict;
  if (s == "degenerate-allowed") return DrawingKind::DegenerateAllowed;
  throw std::invalid_argument("unknown drawing kind: " + s);
}

double squared_dist(const Point& a, const Point& b) {
  double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double dist(const Point& a, const Point& b) { return std::sqrt(squared_dist(a, b)); }

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
  double vx = b.x - a.x, vy = b.y - a.y;
  double len2 = vx * vx + vy * vy;
  if (len2 == 0.0) return dist(p, a);
  double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  Point proj{a.x + t * vx, a.y + t * vy};
  return dist(p, proj);
}

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Interior projection parameter of p onto line ab, or -1 outside (0,1).
double interior_param(const Point& p, const Point& a, const Point& b) {
  double vx = b.x - a.x, vy = b.y - a.y;
  double len2 = vx * vx + vy * vy;
  if (len2 == 0.0) return -1.0;
  double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
  return (t > 0.0 && t < 1.0) ? t : -1.0;
}

void check_finite(const Drawing& d) {
  if (static_cast<int>(d.pos.size()) != d.graph.vertex_count())
    throw std::invalid_argument("drawing has positions for " + std::to_string(d.pos.size()) +
                                " vertices, graph has " +
                                std::to_string(d.graph.vertex_count()));
  for (const auto& p : d.pos)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("drawing contains a non-finite coordinate");
}

}  // namespace

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  double d1 = cross(a, b, c);
  double d2 = cross(a, b, d);
  double d3 = cross(c, d, a);
  double d4 = cross(c, d, b);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

double drawing_diameter(const Drawing& d) {
  double best = 0.0;
  for (size_t i = 0; i < d.pos.size(); ++i)
    for (size_t j = i + 1; j < d.pos.size(); ++j)
      best = std::max(best, squared_dist(d.pos[i], d.pos[j]));
  return std::sqrt(best);
}

bool no_three_collinear(const std::vector<Point>& pts, double tol) {
  const size_t n = pts.size();
  std::vector<double> angles;
  for (size_t i = 0; i < n; ++i) {
    angles.clear();
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      double dx = pts[j].x - pts[i].x, dy = pts[j].y - pts[i].y;
      if (dx * dx + dy * dy == 0.0) return false;  // coincident points
      double a = std::atan2(dy, dx);
      if (a < 0) a += M_PI;           // fold to [0, pi)
      if (a >= M_PI) a -= M_PI;
      angles.push_back(a);
    }
    std::sort(angles.begin(), angles.end());
    for (size_t k = 0; k + 1 < angles.size(); ++k)
      if (angles[k + 1] - angles[k] <= tol) return false;
    if (angles.size() >= 2 && (angles.front() + M_PI) - angles.back() <= tol) return false;
  }
  return true;
}

LengthClassification classify_lengths(const Drawing& d, double rel_tol) {
  if (!(rel_tol > 0)) throw std::invalid_argument("rel_tol must be positive");
  check_finite(d);
  LengthClassification cls;
  cls.rel_tol = rel_tol;
  const auto& edges = d.graph.edges();
  cls.class_of.assign(edges.size(), -1);
  if (edges.empty()) return cls;

  std::vector<size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> sq(edges.size());
  for (size_t e = 0; e < edges.size(); ++e)
    sq[e] = squared_dist(d.pos[static_cast<size_t>(edges[e].first)],
                         d.pos[static_cast<size_t>(edges[e].second)]);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return sq[a] < sq[b]; });

  int cls_id = -1;
  double prev = -1.0;
  for (size_t e : order) {
    bool new_class;
    if (cls_id < 0) {
      new_class = true;
    } else if (sq[e] == 0.0) {
      new_class = prev != 0.0;
    } else {
      new_class = (sq[e] - prev) > rel_tol * sq[e];
    }
    if (new_class) {
      ++cls_id;
      cls.rep_sq.push_back(sq[e]);
      if (sq[e] == 0.0) cls.has_zero_class = true;
    }
    cls.class_of[e] = cls_id;
    prev = sq[e];
  }
  return cls;
}

int count_slope_classes(const Drawing& d, double tol) {
  check_finite(d);
  std::vector<double> angles;
  for (const auto& [u, v] : d.graph.edges()) {
    double dx = d.pos[static_cast<size_t>(v)].x - d.pos[static_cast<size_t>(u)].x;
    double dy = d.pos[static_cast<size_t>(v)].y - d.pos[static_cast<size_t>(u)].y;
    if (dx == 0.0 && dy == 0.0) continue;  // zero-length edge carries no slope
    double a = std::atan2(dy, dx);
    if (a < 0) a += M_PI;
    if (a >= M_PI) a -= M_PI;
    angles.push_back(a);
  }
  if (angles.empty()) return 0;
  std::sort(angles.begin(), angles.end());
  int classes = 1;
  for (size_t i = 1; i < angles.size(); ++i)
    if (angles[i] - angles[i - 1] > tol) ++classes;
  if (classes > 1 && (angles.front() + M_PI) - angles.back() <= tol) --classes;
  return classes;
}

VerifyReport verify_drawing(const Drawing& d, double abs_tol, bool with_crossings) {
  if (abs_tol < 0) throw std::invalid_argument("abs_tol must be non-negative");
  check_finite(d);
  VerifyReport report;
  const int n = d.graph.vertex_count();
  const auto& edges = d.graph.edges();
  const double diam = drawing_diameter(d);
  const double tau = abs_tol * diam;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist(d.pos[static_cast<size_t>(i)], d.pos[static_cast<size_t>(j)]) <= tau)
        report.coincident_pairs.push_back({i, j});

  for (const auto& e : edges) {
    const Point& a = d.pos[static_cast<size_t>(e.first)];
    const Point& b = d.pos[static_cast<size_t>(e.second)];
    for (int u = 0; u < n; ++u) {
      if (u == e.first || u == e.second) continue;
      const Point& p = d.pos[static_cast<size_t>(u)];
      if (interior_param(p, a, b) >= 0.0 && point_segment_distance(p, a, b) <= tau)
        report.vertex_on_edge.push_back({u, e});
    }
  }

  if (with_crossings) {
    for (size_t e = 0; e < edges.size(); ++e)
      for (size_t f = e + 1; f < edges.size(); ++f) {
        const auto& [a, b] = edges[e];
        const auto& [c, g2] = edges[f];
        if (a == c || a == g2 || b == c || b == g2) continue;
        if (segments_cross(d.pos[static_cast<size_t>(a)], d.pos[static_cast<size_t>(b)],
                           d.pos[static_cast<size_t>(c)], d.pos[static_cast<size_t>(g2)]))
          report.crossing_edge_pairs.push_back({edges[e], edges[f]});
      }
  }

  report.crossing_count = static_cast<int>(report.crossing_edge_pairs.size());
  report.is_degenerate = !report.coincident_pairs.empty() || !report.vertex_on_edge.empty();
  report.distinct_length_count = edges.empty() ? 0 : classify_lengths(d).count();
  return report;
}

bool adjacency_faithful_unit(const Drawing& d, double tol) {
  check_finite(d);
  const int n = d.graph.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double dd = dist(d.pos[static_cast<size_t>(u)], d.pos[static_cast<size_t>(v)]);
      if (d.graph.has_edge(u, v)) {
        if (std::abs(dd - 1.0) > tol) return false;
      } else {
        if (std::abs(dd - 1.0) <= tol) return false;
      }
    }
  return true;
}

std::string emit_drawing_json(const Drawing& d) {
  check_finite(d);
  nlohmann::ordered_json j;
  j["n"] = d.graph.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : d.graph.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  auto pos = nlohmann::ordered_json::array();
  for (const auto& p : d.pos) pos.push_back({p.x, p.y});
  j["pos"] = std::move(pos);
  j["kind"] = to_string(d.kind);
  return j.dump();
}

Drawing parse_drawing_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("drawing JSON parse failure: ") + e.what());
  }
  try {
    int n = j.at("n").get<int>();
    std::vector<Graph::Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Drawing d;
    d.graph = Graph(n, std::move(edges));
    for (const auto& p : j.at("pos")) {
      if (!p.is_array() || p.size() != 2) throw std::invalid_argument("position must be a pair");
      d.pos.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    d.kind = drawing_kind_from_string(j.at("kind").get<std::string>());
    check_finite(d);
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("drawing JSON schema violation: ") + e.what());
  }
}

namespace {

std::string class_colour(int cls, int total) {
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                  "#bcbd22", "#17becf", "#aec7e8", "#ffbb78"};
  if (cls < 12) return palette[cls];
  int hue = (360 * cls) / std::max(total, 1);
  std::ostringstream out;
  out << "hsl(" << hue << ",65%,42%)";
  return out.str();
}

}  // namespace

std::string emit_drawing_svg(const Drawing& d, double rel_tol) {
  check_finite(d);
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (!d.pos.empty()) {
    min_x = max_x = d.pos[0].x;
    min_y = max_y = d.pos[0].y;
    for (const auto& p : d.pos) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  double margin = 0.05 * span;
  auto cls = d.graph.edge_count() > 0 ? classify_lengths(d, rel_tol) : LengthClassification{};

  std::ostringstream svg;
  svg << std::setprecision(10);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (min_x - margin) << " "
      << (-max_y - margin) << " " << (max_x - min_x + 2 * margin) << " "
      << (max_y - min_y + 2 * margin) << "\">\n";
  svg << "<!-- kind: " << to_string(d.kind) << "; length classes: " << cls.count() << " -->\n";
  double stroke = 0.004 * span;
  for (size_t e = 0; e < d.graph.edges().size(); ++e) {
    const auto& [u, v] = d.graph.edges()[e];
    const Point& a = d.pos[static_cast<size_t>(u)];
    const Point& b = d.pos[static_cast<size_t>(v)];
    svg << "<line x1=\"" << a.x << "\" y1=\"" << -a.y << "\" x2=\"" << b.x << "\" y2=\""
        << -b.y << "\" stroke=\"" << class_colour(cls.class_of[e], cls.count())
        << "\" stroke-width=\"" << stroke << "\"/>\n";
  }
  double r = 0.008 * span;
  for (const auto& p : d.pos)
    svg << "<circle cx=\"" << p.x << "\" cy=\"" << -p.y << "\" r=\"" << r
        << "\" fill=\"#222222\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace fewlen
