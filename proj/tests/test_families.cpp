#include <doctest.h>

#include <set>
#include <stdexcept>

#include "fewlen/families.hpp"
#include "fewlen/structure.hpp"

using namespace fewlen;

TEST_CASE("complete graph sizes") {
  CHECK(make_complete(10).edge_count() == 45);
  CHECK(make_complete(1).edge_count() == 0);
}

TEST_CASE("frame graph") {
  Graph f18 = make_frame(18);
  CHECK(f18.vertex_count() == 18);
  CHECK(frame_matching_set(18).size() == 6);
  CHECK(f18.max_degree() <= 4);

  // n = 6: nine edges, 2n-3
  Graph f6 = make_frame(6);
  CHECK(f6.edge_count() == 2 * 6 - 3);
  std::set<Graph::Edge> expect{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                               {2, 4}, {3, 4}, {3, 5}, {4, 5}};
  std::set<Graph::Edge> got(f6.edges().begin(), f6.edges().end());
  CHECK(got == expect);

  CHECK_THROWS_AS(make_frame(7), std::invalid_argument);
  CHECK_THROWS_AS(make_frame(12 + 1), std::invalid_argument);
}

TEST_CASE("frame with matching has maximum degree 5") {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    auto m = random_frame_matching(18, seed);
    Graph g = make_frame_with_matching(18, m);
    CHECK(g.max_degree() == 5);
    CHECK(g.edge_count() == make_frame(18).edge_count() + 3);
  }
  // matching off the special set is rejected
  CHECK_THROWS_AS(make_frame_with_matching(6, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_frame_with_matching(6, {{0, 0}}), std::invalid_argument);
  // not perfect
  CHECK_THROWS_AS(make_frame_with_matching(12, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("random trees are trees") {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Graph t = make_random_tree(1 + static_cast<int>(seed * 7 % 40), seed);
    CHECK(t.is_tree());
  }
  CHECK(make_random_tree(200, 9).is_tree());
}

TEST_CASE("hypercube") {
  Graph q3 = make_hypercube(3);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);
  for (int v = 0; v < 8; ++v) CHECK(q3.degree(v) == 3);
}

TEST_CASE("cactus blocks are cycles") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Graph c = make_random_cactus(5, 9, seed);
    CHECK(c.connected());
    CHECK(is_k4minus_free(c).free);
  }
}

TEST_CASE("diamond tree family") {
  for (int n : {64, 128, 256, 512}) {
    Graph g = make_diamond_tree(n);
    CHECK(g.vertex_count() == n);
    CHECK(g.connected());
    CHECK(g.max_degree() <= 4);
    CHECK_FALSE(is_k4minus_free(g).free);  // diamonds are exactly the K4-minus minor
  }
}

TEST_CASE("forced unit graph shape") {
  Graph g = make_forced_unit();
  CHECK(g.vertex_count() == 7);
  CHECK(g.edge_count() == 11);
  auto [a, b] = forced_unit_pair();
  CHECK_FALSE(g.has_edge(a, b));
}

TEST_CASE("family descriptor parsing") {
  CHECK(parse_family("complete:10").edge_count() == 45);
  CHECK(parse_family("complete_bipartite:2,8").edge_count() == 16);
  CHECK(parse_family("cycle:9").is_cycle());
  CHECK_THROWS_AS(parse_family("frobnicate:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("complete"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("frame:7"), std::invalid_argument);
  CHECK_FALSE(family_descriptors().empty());
}
