#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "fewlen/constructions.hpp"
#include "fewlen/families.hpp"

using namespace fewlen;

namespace {

Graph caterpillar(int spine, int legs_per_vertex) {
  std::vector<Graph::Edge> edges;
  int next = spine;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i < spine; ++i)
    for (int l = 0; l < legs_per_vertex; ++l) edges.emplace_back(i, next++);
  return Graph(next, edges);
}

Graph complete_binary_tree(int depth) {
  int n = (1 << (depth + 1)) - 1;
  std::vector<Graph::Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
  return Graph(n, edges);
}

std::multiset<long long> length_multiset(const Drawing& d) {
  std::multiset<long long> out;
  for (const auto& [u, v] : d.graph.edges())
    out.insert(llround(1e12 * dist(d.pos[static_cast<size_t>(u)], d.pos[static_cast<size_t>(v)])));
  return out;
}

}  // namespace

TEST_CASE("complete n-gon drawings") {
  CHECK(draw_complete_ngon(3).measured_classes == 1);
  CHECK(draw_complete_ngon(10).measured_classes == 5);
  CHECK_THROWS_AS(draw_complete_ngon(2), std::invalid_argument);

  // n = 7: the three chord lengths 2 sin(k pi / 7) are pairwise distinct
  auto k7 = draw_complete_ngon(7);
  std::set<double> chords;
  for (int k = 1; k <= 3; ++k) chords.insert(2.0 * std::sin(k * M_PI / 7));
  CHECK(chords.size() == 3);
  CHECK(k7.measured_classes == 3);
  CHECK(k7.claimed_bound == 3);

  for (int n = 3; n <= 40; ++n) {
    auto r = draw_complete_ngon(n);
    CHECK(r.measured_classes == n / 2);
    CHECK(verify_drawing(r.drawing, 1e-9, false).strict_valid());
  }
}

TEST_CASE("complete bipartite 2n-gon drawings") {
  CHECK(draw_complete_bipartite_ngon(1, 1).measured_classes == 1);
  CHECK(draw_complete_bipartite_ngon(4, 4).measured_classes == 2);
  CHECK(draw_complete_bipartite_ngon(5, 5).measured_classes == 3);
  for (int n = 1; n <= 30; ++n) {
    auto r = draw_complete_bipartite_ngon(n, n);
    CHECK(r.measured_classes == (n + 1) / 2);
    CHECK(verify_drawing(r.drawing, 1e-9, false).strict_valid());
  }
  // smaller class drawn by deleting vertices keeps the bound
  auto r = draw_complete_bipartite_ngon(2, 8);
  CHECK(r.measured_classes <= 4);
}

TEST_CASE("K_{2,n} two-centre drawings") {
  auto r8 = draw_k2n(8);
  CHECK(r8.drawing.graph.vertex_count() == 10);
  CHECK(r8.measured_classes == 2);
  CHECK(r8.claimed_bound == 2);

  CHECK(draw_k2n(1).measured_classes == 1);

  // n = 2 d^2 with d = 3 uses all 18 intersection points
  auto r18 = draw_k2n(18);
  CHECK(r18.measured_classes == 3);
  std::set<std::pair<long long, long long>> distinct;
  for (int b = 2; b < 20; ++b)
    distinct.insert({llround(1e9 * r18.drawing.pos[static_cast<size_t>(b)].x),
                     llround(1e9 * r18.drawing.pos[static_cast<size_t>(b)].y)});
  CHECK(distinct.size() == 18);

  for (int n : {3, 5, 17, 50, 200}) {
    auto r = draw_k2n(n, 7);
    int d = r.claimed_bound;
    CHECK(2 * d * d >= n);
    CHECK((d == 1 || 2 * (d - 1) * (d - 1) < n));
    CHECK(r.measured_classes == d);
    CHECK(verify_drawing(r.drawing, 1e-9, false).strict_valid());
    const auto& pos = r.drawing.pos;
    if (n <= 2 * d * (d - 1) + 2) {
      // full general position is attainable below the bisector threshold
      CHECK(no_three_collinear(pos));
    }
    // no collinear triple may involve a centre, whatever n is
    for (int centre : {0, 1})
      for (size_t i = 2; i < pos.size(); ++i)
        for (size_t j = i + 1; j < pos.size(); ++j) {
          double ux = pos[i].x - pos[static_cast<size_t>(centre)].x;
          double uy = pos[i].y - pos[static_cast<size_t>(centre)].y;
          double vx = pos[j].x - pos[static_cast<size_t>(centre)].x;
          double vy = pos[j].y - pos[static_cast<size_t>(centre)].y;
          CHECK(std::abs(ux * vy - uy * vx) >
                1e-9 * std::sqrt((ux * ux + uy * uy) * (vx * vx + vy * vy)));
        }
  }
}

TEST_CASE("K_{2,n} keeps forced bisector points to the minimum") {
  // any drawing of K_{2,n} with exactly d lengths puts all equal-radius
  // intersections on the bisector of the centres; only n - 2d(d-1) of them
  // are ever needed
  auto r = draw_k2n(8, 0);
  CHECK(r.metrics.at("bisector_points") == 4);
  auto r6 = draw_k2n(6, 0);
  CHECK(r6.metrics.at("bisector_points") <= 2);
  CHECK(no_three_collinear(r6.drawing.pos));
}

TEST_CASE("K_{3,n} three-centre drawings") {
  auto r8 = draw_k3n(8);
  CHECK(r8.claimed_bound == 5);
  CHECK(r8.measured_classes <= 5);
  CHECK(r8.drawing.kind == DrawingKind::DegenerateAllowed);

  auto r1 = draw_k3n(1);
  CHECK(r1.claimed_bound == 2);
  CHECK(r1.measured_classes <= 2);

  // middle-centre distances follow sqrt((i+j)/(2d+2)) exactly
  auto r18 = draw_k3n(18);
  const int d = 3;
  std::set<long long> measured;
  for (int b = 3; b < 21; ++b) {
    double dd = dist(r18.drawing.pos[1], r18.drawing.pos[static_cast<size_t>(b)]);
    measured.insert(llround(1e9 * dd));
    bool matches_closed_form = false;
    for (int s = 2; s <= 2 * d; ++s)
      if (std::abs(dd - std::sqrt(s / (2.0 * d + 2.0))) <= 1e-9) matches_closed_form = true;
    CHECK(matches_closed_form);
  }
  CHECK(measured.size() == 2 * d - 1);

  for (int n : {2, 9, 40, 200}) {
    auto r = draw_k3n(n);
    CHECK(r.measured_classes <= r.claimed_bound);
    // degenerate-allowed still means distinct points
    CHECK(verify_drawing(r.drawing, 1e-9, false).coincident_pairs.empty());
  }
}

TEST_CASE("unit tree drawing of paths and stars") {
  auto path = draw_tree_unit(make_path(12));
  CHECK(path.measured_classes == 1);
  auto report = verify_drawing(path.drawing, 1e-9, true);
  CHECK(report.strict_valid());
  CHECK(report.crossing_count == 0);
  CHECK(adjacency_faithful_unit(path.drawing));

  auto star = draw_tree_unit(make_complete_bipartite(1, 8));
  CHECK(star.measured_classes == 1);
  auto star_report = verify_drawing(star.drawing, 1e-9, true);
  CHECK(star_report.strict_valid());
  CHECK(star_report.crossing_count == 0);
  CHECK(adjacency_faithful_unit(star.drawing));

  CHECK_THROWS_AS(draw_tree_unit(make_cycle(4)), std::invalid_argument);
}

TEST_CASE("unit tree drawing on random trees") {
  for (uint64_t seed = 0; seed < 12; ++seed) {
    Graph t = make_random_tree(10 + static_cast<int>(seed) * 16, seed);
    auto r = draw_tree_unit(t);
    CHECK(r.measured_classes == 1);
    for (const auto& [u, v] : t.edges())
      CHECK(std::abs(dist(r.drawing.pos[static_cast<size_t>(u)],
                          r.drawing.pos[static_cast<size_t>(v)]) -
                     1.0) <= 1e-9);
    auto report = verify_drawing(r.drawing, 1e-9, true);
    CHECK(report.strict_valid());
    CHECK(report.crossing_count == 0);
    CHECK(adjacency_faithful_unit(r.drawing));
  }
}

TEST_CASE("pasting unit triangles") {
  auto tri = draw_complete_ngon(3);
  // rescale to unit sides
  Drawing unit_tri = tri.drawing;
  double side = dist(unit_tri.pos[0], unit_tri.pos[1]);
  for (auto& p : unit_tri.pos) p = {p.x / side, p.y / side};

  std::mt19937_64 rng(3);
  Drawing bowtie = paste_drawings(unit_tri, 0, unit_tri, 0, true, rng);
  CHECK(bowtie.graph.vertex_count() == 5);
  CHECK(bowtie.graph.edge_count() == 6);
  CHECK(verify_drawing(bowtie, 1e-9, false).strict_valid());
  CHECK(classify_lengths(bowtie).count() == 1);
  CHECK(adjacency_faithful_unit(bowtie, 1e-7));

  // pasting preserves both length multisets
  auto lengths = length_multiset(bowtie);
  auto tri_lengths = length_multiset(unit_tri);
  std::multiset<long long> expect;
  for (auto v : tri_lengths) {
    expect.insert(v);
    expect.insert(v);
  }
  CHECK(lengths == expect);
}

TEST_CASE("pasting keeps class unions") {
  auto a = draw_complete_ngon(5);
  auto b = draw_complete_ngon(4);
  std::mt19937_64 rng(11);
  Drawing joined = paste_drawings(a.drawing, 2, b.drawing, 1, false, rng);
  CHECK(verify_drawing(joined, 1e-9, false).strict_valid());
  int ca = classify_lengths(a.drawing).count();
  int cb = classify_lengths(b.drawing).count();
  CHECK(classify_lengths(joined).count() <= ca + cb);
  auto joined_lengths = length_multiset(joined);
  for (auto v : length_multiset(a.drawing)) CHECK(joined_lengths.count(v) >= 1);
}

TEST_CASE("K4-minus-free drawings: cycles, trees, cacti") {
  auto c9 = draw_k4minus_free(make_cycle(9));
  CHECK(c9.measured_classes == 1);
  CHECK(adjacency_faithful_unit(c9.drawing, 1e-7));
  CHECK(verify_drawing(c9.drawing, 1e-9, false).strict_valid());

  auto tree = draw_k4minus_free(make_random_tree(18, 2));
  CHECK(tree.measured_classes == 1);
  CHECK(adjacency_faithful_unit(tree.drawing, 1e-7));

  for (uint64_t seed = 0; seed < 8; ++seed) {
    Graph cactus = make_random_cactus(5, 8, seed);
    auto r = draw_k4minus_free(cactus, seed);
    CHECK(r.measured_classes == 1);
    CHECK(verify_drawing(r.drawing, 1e-9, false).strict_valid());
    CHECK(adjacency_faithful_unit(r.drawing, 1e-7));
  }

  CHECK_THROWS_AS(draw_k4minus_free(make_complete(4)), std::invalid_argument);
}

TEST_CASE("ordering drawings") {
  auto c8 = draw_from_ordering(make_cycle(8), VertexOrdering::identity(8));
  CHECK(c8.measured_classes == 1);
  CHECK(c8.claimed_bound == 1);

  auto p4 = draw_from_ordering(make_path(4), VertexOrdering::identity(4));
  CHECK(p4.measured_classes == 1);
  CHECK(p4.claimed_bound == 1);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> nd(2, 24);
    int n = nd(rng);
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (pd(rng) < 0.3) edges.emplace_back(u, v);
    Graph g(n, edges);
    std::vector<int> sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    VertexOrdering ord{sigma};
    auto r = draw_from_ordering(g, ord);
    CHECK(r.measured_classes <= ordering_cyclic_width(g, ord));
    CHECK(verify_drawing(r.drawing, 1e-9, false).strict_valid());
  }
}

TEST_CASE("h-partition drawing of C_6 over the 4-part path") {
  Graph c6 = make_cycle(6);
  auto part = tree_partition(c6);
  Drawing h;
  h.graph = part.quotient;
  for (int i = 0; i < h.graph.vertex_count(); ++i) h.pos.push_back({static_cast<double>(i), 0.0});
  auto r = draw_h_partition(c6, part, h);
  CHECK(r.metrics.at("s") == 1);
  CHECK(r.metrics.at("l") == 1);
  CHECK(r.claimed_bound == 4);  // 1*1*2*1 + 1 + 1
  CHECK(r.measured_classes <= 4);
  CHECK(verify_drawing(r.drawing, 1e-9, false).strict_valid());

  // path-partition bound w(w-1) + floor(w/2) + 1 equals k(k - 1/2) + 1 for even k
  for (int k = 2; k <= 8; k += 2)
    CHECK(k * (k - 1) + k / 2 + 1 == doctest::Approx(k * (k - 0.5) + 1));
}

TEST_CASE("h-partition with width-1 parts degenerates to the quotient count") {
  Graph g = make_cycle(5);
  HPartition part;
  part.parts = {{0}, {1}, {2}, {3}, {4}};
  part.quotient = g;
  auto h = draw_from_ordering(g, VertexOrdering::identity(5)).drawing;
  auto r = draw_h_partition(g, part, h);
  int l = classify_lengths(h).count();
  CHECK(r.claimed_bound == l);
  CHECK(r.measured_classes <= l);
}

TEST_CASE("h-partition rejects mismatched quotient drawings") {
  Graph c6 = make_cycle(6);
  auto part = tree_partition(c6);
  Drawing wrong;
  wrong.graph = make_path(3);
  wrong.pos = {{0, 0}, {1, 0}, {2, 0}};
  CHECK_THROWS_AS(draw_h_partition(c6, part, wrong), std::invalid_argument);
}

TEST_CASE("bounded tree drawing: paths, caterpillars, binary trees") {
  auto pathdraw = draw_tree_bounded(make_path(30));
  CHECK(pathdraw.measured_classes == 1);
  CHECK(pathdraw.metrics.at("slopes") == 1);
  CHECK(pathdraw.metrics.at("pw_est") == 1);

  auto cat = draw_tree_bounded(caterpillar(10, 2));
  CHECK(cat.metrics.at("pw_est") <= 2);
  CHECK(cat.measured_classes <= 2 * 2 - 1);
  CHECK(verify_drawing(cat.drawing, 1e-9, false).strict_valid());

  Graph cbt = complete_binary_tree(6);
  auto r = draw_tree_bounded(cbt);
  double target = 2 * std::ceil(std::log2(2.0 * cbt.vertex_count() + 1)) - 1;
  CHECK(r.measured_classes <= target);
  CHECK(r.metrics.at("slopes") <= std::max(cbt.max_degree() - 1, 1));
  CHECK(r.measured_classes <= r.claimed_bound);
  CHECK(verify_drawing(r.drawing, 1e-9, false).strict_valid());

  // random trees keep the structural targets
  for (uint64_t seed = 0; seed < 8; ++seed) {
    Graph t = make_random_tree(60, seed);
    auto rt = draw_tree_bounded(t);
    CHECK(rt.measured_classes <= rt.claimed_bound);
    CHECK(rt.metrics.at("slopes") <= std::max(t.max_degree() - 1, 1));
    CHECK(verify_drawing(rt.drawing, 1e-9, false).strict_valid());
  }
}

TEST_CASE("treewidth pipeline on simple inputs") {
  auto ring = draw_treewidth_pipeline(make_cycle(24));
  CHECK(ring.measured_classes <= ring.claimed_bound);
  CHECK(ring.measured_classes <= ring.metrics.at("formula_bound"));
  CHECK(verify_drawing(ring.drawing, 1e-9, false).strict_valid());

  auto tree = draw_treewidth_pipeline(complete_binary_tree(5));
  CHECK(tree.measured_classes <= tree.claimed_bound);
  CHECK(tree.measured_classes <= tree.metrics.at("formula_bound"));
}

TEST_CASE("cartesian products of unit squares and triangles") {
  Drawing square;
  square.graph = make_cycle(4);
  square.pos = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  auto torus = draw_cartesian_product(square, square);
  CHECK(torus.drawing.graph.vertex_count() == 16);
  CHECK(torus.measured_classes == 1);
  CHECK(torus.claimed_bound == 1);
  CHECK(verify_drawing(torus.drawing, 1e-9, false).strict_valid());

  auto k3 = draw_complete_ngon(3).drawing;
  auto k3k3 = draw_cartesian_product(k3, k3, 1);
  CHECK(k3k3.measured_classes == 1);
  Drawing k2;
  k2.graph = make_path(2);
  k2.pos = {{0, 0}, {1, 0}};
  auto k3k3k2 = draw_cartesian_product(k3k3.drawing, k2, 2);
  CHECK(k3k3k2.drawing.graph.vertex_count() == 18);
  CHECK(k3k3k2.measured_classes == 1);

  // C_5^d keeps one class
  auto c5 = draw_k4minus_free(make_cycle(5)).drawing;
  auto c5_2 = draw_cartesian_product(c5, c5, 3);
  CHECK(c5_2.measured_classes == 1);
  auto c5_3 = draw_cartesian_product(c5_2.drawing, c5, 4);
  CHECK(c5_3.measured_classes == 1);
  CHECK(c5_3.drawing.graph.vertex_count() == 125);

  // product preserves each factor's length multiset per copy
  auto p3 = draw_tree_unit(make_path(3)).drawing;
  auto c4p3 = draw_cartesian_product(square, p3, 5);
  CHECK(c4p3.measured_classes <= 1 + 1 - 1);
}

TEST_CASE("cartesian product bound on random construction pairs") {
  std::mt19937_64 rng(17);
  std::vector<Drawing> pool;
  pool.push_back(draw_complete_ngon(5).drawing);
  pool.push_back(draw_complete_ngon(8).drawing);
  pool.push_back(draw_complete_bipartite_ngon(3, 3).drawing);
  pool.push_back(draw_tree_unit(make_random_tree(6, 1)).drawing);
  pool.push_back(draw_k4minus_free(make_cycle(7)).drawing);
  for (int trial = 0; trial < 10; ++trial) {
    const auto& dg = pool[trial % pool.size()];
    const auto& dh = pool[(trial * 3 + 1) % pool.size()];
    auto r = draw_cartesian_product(dg, dh, static_cast<uint64_t>(trial));
    int cg = classify_lengths(dg).count();
    int ch = classify_lengths(dh).count();
    CHECK(r.measured_classes <= cg + ch - 1);
    CHECK(verify_drawing(r.drawing, 1e-9, false).strict_valid());
  }
}
