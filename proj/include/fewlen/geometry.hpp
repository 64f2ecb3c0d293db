#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fewlen/graph.hpp"

namespace fewlen {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

enum class DrawingKind { Strict, DegenerateAllowed };

std::string to_string(DrawingKind kind);
DrawingKind drawing_kind_from_string(const std::string& s);

/// Straight-line drawing: positions indexed by vertex.
struct Drawing {
  Graph graph;
  std::vector<Point> pos;
  DrawingKind kind = DrawingKind::Strict;
};

double squared_dist(const Point& a, const Point& b);
double dist(const Point& a, const Point& b);
/// Distance from p to the closed segment [a,b].
double point_segment_distance(const Point& p, const Point& a, const Point& b);
/// Proper crossing: interiors intersect transversally.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);
/// Max pairwise vertex distance; 0 for fewer than two vertices.
double drawing_diameter(const Drawing& d);
/// General-position test used by the two-centre construction.
bool no_three_collinear(const std::vector<Point>& pts, double tol = 1e-9);

/// Partition of the edges into distinct-squared-length groups. Sorted
/// ascending, single linkage: consecutive squared lengths merge when they
/// differ by at most rel_tol relative to the larger one.
struct LengthClassification {
  std::vector<int> class_of;    // per edge id; classes numbered by ascending length
  std::vector<double> rep_sq;   // smallest squared length in each class
  double rel_tol = 1e-9;
  bool has_zero_class = false;  // a coincident-endpoint edge was classified

  int count() const { return static_cast<int>(rep_sq.size()); }
};

LengthClassification classify_lengths(const Drawing& d, double rel_tol = 1e-9);

/// Edge direction classes modulo pi, single linkage at absolute tolerance.
int count_slope_classes(const Drawing& d, double tol = 1e-9);

struct VerifyReport {
  int distinct_length_count = 0;
  bool is_degenerate = false;
  int crossing_count = 0;
  std::vector<std::pair<int, int>> coincident_pairs;
  std::vector<std::pair<int, Graph::Edge>> vertex_on_edge;
  std::vector<std::pair<Graph::Edge, Graph::Edge>> crossing_edge_pairs;

  bool strict_valid() const { return !is_degenerate; }
};

/// Coincidence and point-on-open-edge checks at threshold abs_tol times the
/// drawing diameter; crossings between edges with no shared endpoint are
/// reported but never make a drawing invalid.
VerifyReport verify_drawing(const Drawing& d, double abs_tol = 1e-9,
                            bool with_crossings = true);

/// True iff every edge length is within tol of 1 and every non-adjacent
/// vertex pair is farther than tol from unit distance.
bool adjacency_faithful_unit(const Drawing& d, double tol = 1e-9);

/// JSON schema: {"n":..., "edges":[[u,v],...], "pos":[[x,y],...], "kind":...}.
/// Round-trips through parse_drawing_json bit-exactly.
std::string emit_drawing_json(const Drawing& d);
Drawing parse_drawing_json(const std::string& text);

/// SVG 1.1; edges stroke-coloured by length class.
std::string emit_drawing_svg(const Drawing& d, double rel_tol = 1e-9);

}  // namespace fewlen
