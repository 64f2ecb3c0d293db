#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fewlen/families.hpp"
#include "fewlen/structure.hpp"
#include "oracles.hpp"

using namespace fewlen;

TEST_CASE("width and cyclic width definitions") {
  // P_4 with sigma = (1,3,2,4)
  Graph p4 = make_path(4);
  VertexOrdering ord{{1, 3, 2, 4}};
  CHECK(ordering_width(p4, ord) == 2);
  CHECK(ordering_cyclic_width(p4, ord) == 2);

  Graph c8 = make_cycle(8);
  CHECK(ordering_cyclic_width(c8, VertexOrdering::identity(8)) == 1);

  Graph empty(4, {});
  CHECK(ordering_width(empty, VertexOrdering::identity(4)) == 0);
  CHECK_THROWS_AS(ordering_width(p4, VertexOrdering{{1, 1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("cyclic width never exceeds width") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    std::uniform_int_distribution<int> nd(2, 14);
    int n = nd(rng);
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    double p = pd(rng);
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (pd(rng) < p) edges.emplace_back(u, v);
    Graph g(n, edges);
    std::vector<int> sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    VertexOrdering ord{sigma};
    int w = ordering_width(g, ord);
    CHECK(ordering_cyclic_width(g, ord) <= w);
    CHECK(w <= n - 1);
  }
}

TEST_CASE("bandwidth ordering heuristics") {
  Graph p9 = make_path(9);
  CHECK(ordering_width(p9, bandwidth_ordering(p9)) == 1);

  Graph c12 = make_cycle(12);
  CHECK(ordering_cyclic_width(c12, bandwidth_ordering(c12)) == 1);

  Graph star = make_complete_bipartite(1, 5);
  CHECK(ordering_width(star, bandwidth_ordering(star)) <= 5);
  CHECK(oracle::exact_bandwidth(star) == 3);
}

TEST_CASE("block decomposition of pasted triangles") {
  // two triangles sharing vertex 0
  Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  auto dec = block_decomposition(bowtie);
  CHECK(dec.blocks.size() == 2);
  CHECK(dec.cut_vertices == std::vector<int>{0});
  CHECK_FALSE(dec.disconnected_input);
}

TEST_CASE("block decomposition of a cycle") {
  auto dec = block_decomposition(make_cycle(9));
  CHECK(dec.blocks.size() == 1);
  CHECK(dec.cut_vertices.empty());
  CHECK(dec.blocks[0].is_cycle());
}

TEST_CASE("block decomposition of random trees") {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    Graph t = make_random_tree(20, seed);
    auto dec = block_decomposition(t);
    CHECK(dec.blocks.size() == 19);  // every edge is a block
    for (const auto& b : dec.blocks) CHECK(b.is_edge());
    // cut vertices = internal vertices, cross-checked by brute-force removal
    auto brute = oracle::articulation_points_brute(t);
    CHECK(dec.cut_vertices == brute);
  }
}

TEST_CASE("block pasting order touches predecessors in one vertex") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = make_random_cactus(6, 8, static_cast<uint64_t>(trial));
    auto dec = block_decomposition(g);
    std::set<int> seen;
    for (size_t i = 0; i < dec.blocks.size(); ++i) {
      std::vector<int> shared;
      for (int v : dec.blocks[i].vertices)
        if (seen.count(v)) shared.push_back(v);
      if (i == 0)
        CHECK(shared.empty());
      else
        CHECK(shared.size() == 1);
      for (int v : dec.blocks[i].vertices) seen.insert(v);
    }
  }
}

TEST_CASE("articulation points match brute force on random graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> nd(2, 9);
    int n = nd(rng);
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (pd(rng) < 0.35) edges.emplace_back(u, v);
    Graph g(n, edges);
    auto dec = block_decomposition(g);
    CHECK(dec.cut_vertices == oracle::articulation_points_brute(g));
  }
}

TEST_CASE("K4-minus recognition examples") {
  // C_5 plus a chord
  Graph chord(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}});
  auto rec = is_k4minus_free(chord);
  CHECK_FALSE(rec.free);
  CHECK(rec.witness >= 0);
  CHECK(chord.degree(rec.witness) >= 3);

  // two squares pasted at a vertex
  Graph squares(7, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 6}});
  CHECK(is_k4minus_free(squares).free);
}

TEST_CASE("K4-minus recognition agrees with the minor oracle on all connected n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : oracle::all_connected_graphs(n)) {
      bool lib = is_k4minus_free(g).free;
      bool brute = !oracle::has_k4minus_minor(g);
      CHECK(lib == brute);
    }
  }
}

TEST_CASE("tree partition of a tree is the tree itself") {
  Graph t = make_random_tree(15, 3);
  auto part = tree_partition(t);
  CHECK(part.parts.size() == 15);
  CHECK(part.width() == 1);
  validate_hpartition(t, part);
  CHECK(part.quotient.edge_count() == 14);
}

TEST_CASE("tree partition of C_6 gives the 4-part path") {
  auto part = tree_partition(make_cycle(6));
  validate_hpartition(make_cycle(6), part);
  CHECK(part.parts.size() == 4);
  CHECK(part.width() == 2);
  std::vector<std::vector<int>> expect{{0}, {1, 5}, {2, 4}, {3}};
  CHECK(part.parts == expect);
  // quotient is a path
  CHECK(part.quotient.edge_count() == 3);
  CHECK(part.quotient.is_tree());
}

TEST_CASE("tree partition of the 3x3 grid") {
  std::vector<Graph::Edge> edges;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      if (c + 1 < 3) edges.emplace_back(3 * r + c, 3 * r + c + 1);
      if (r + 1 < 3) edges.emplace_back(3 * r + c, 3 * (r + 1) + c);
    }
  Graph grid(9, edges);
  auto part = tree_partition(grid);
  validate_hpartition(grid, part);
  CHECK(part.quotient.is_tree());
  CHECK(part.width() <= 3);
}

TEST_CASE("tree partition and path partition validate on random connected graphs") {
  std::mt19937_64 rng(11);
  int done = 0;
  while (done < 30) {
    std::uniform_int_distribution<int> nd(2, 24);
    int n = nd(rng);
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (pd(rng) < 0.2) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (!g.connected()) continue;
    ++done;
    auto tp = tree_partition(g);
    validate_hpartition(g, tp);
    CHECK(tp.quotient.is_tree());
    auto pp = path_partition(g);
    validate_hpartition(g, pp);
  }
  CHECK_THROWS_AS(tree_partition(Graph(4, {})), std::invalid_argument);
}

TEST_CASE("hpartition validator rejects bad partitions") {
  Graph g = make_cycle(4);
  HPartition p;
  p.parts = {{0, 1}, {2}};  // vertex 3 uncovered
  p.quotient = Graph(2, {{0, 1}});
  CHECK_THROWS_AS(validate_hpartition(g, p), std::invalid_argument);
  p.parts = {{0, 1}, {2, 3}, {3}};  // overlap
  p.quotient = Graph(3, {});
  CHECK_THROWS_AS(validate_hpartition(g, p), std::invalid_argument);
  p.parts = {{0, 1}, {2, 3}};
  p.quotient = Graph(2, {});  // missing quotient edge
  CHECK_THROWS_AS(validate_hpartition(g, p), std::invalid_argument);
}
