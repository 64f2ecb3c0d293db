#include <doctest.h>

#include <random>

#include "fewlen/families.hpp"
#include "fewlen/graph6.hpp"

using namespace fewlen;

TEST_CASE("graph6 decodes the 5-vertex star D?{") {
  Graph g = parse_graph6("D?{");
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 4);
  CHECK(write_graph6(g) == "D?{");
}

TEST_CASE("graph6 of K_4 encodes to C~ and back") {
  Graph k4 = make_complete(4);
  CHECK(write_graph6(k4) == "C~");
  Graph back = parse_graph6("C~");
  CHECK(back.vertex_count() == 4);
  CHECK(back.edge_count() == 6);
}

TEST_CASE("graph6 truncation reports the byte offset") {
  CHECK_THROWS_AS(parse_graph6("E"), graph6_error);
  try {
    parse_graph6("E");
  } catch (const graph6_error& e) {
    CHECK(e.byte_offset() == 1);
  }
}

TEST_CASE("graph6 rejects out-of-range characters") {
  CHECK_THROWS_AS(parse_graph6("D\x05..."), graph6_error);
  CHECK_THROWS_AS(parse_graph6(std::string(1, char(200)) + "???"), graph6_error);
}

TEST_CASE("graph6 round-trips random graphs up to n = 62") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> nd(0, 62);
    int n = nd(rng);
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    double p = pd(rng);
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (pd(rng) < p) edges.emplace_back(u, v);
    Graph g(n, edges);
    Graph round = parse_graph6(write_graph6(g));
    CHECK(round.vertex_count() == g.vertex_count());
    CHECK(round.edges() == g.edges());
  }
}

TEST_CASE("graph6 long size header") {
  Graph g = make_path(100);
  Graph round = parse_graph6(write_graph6(g));
  CHECK(round.vertex_count() == 100);
  CHECK(round.edges() == g.edges());
}

TEST_CASE("graph6 accepts the >>graph6<< prefix and trailing newline") {
  Graph g = parse_graph6(">>graph6<<D?{\n");
  CHECK(g.vertex_count() == 5);
}

TEST_CASE("edge list fallback") {
  Graph g = parse_edge_list("0 1\n1 2\n# comment\n2 3\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  Graph h = parse_graph_auto("0 1\n1 2\n");
  CHECK(h.edge_count() == 2);
  Graph i = parse_graph_auto("D?{");
  CHECK(i.vertex_count() == 5);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}
