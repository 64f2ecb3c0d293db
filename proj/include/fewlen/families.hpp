#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fewlen/graph.hpp"

namespace fewlen {

Graph make_complete(int n);
Graph make_complete_bipartite(int m, int n);
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_hypercube(int d);
/// Uniform labelled tree via a random Pruefer sequence.
Graph make_random_tree(int n, uint64_t seed);

/// Frame graph on v_0..v_{n-1}: edges between indices at distance <= 2.
/// Requires n == 0 (mod 6). Maximum degree 4.
Graph make_frame(int n);
/// The independent set S = {v_i : i == 0 (mod 3)} carrying the matchings.
std::vector<int> frame_matching_set(int n);
/// Frame plus a perfect matching on S; maximum degree 5.
/// Throws if the matching is not a perfect matching of S.
Graph make_frame_with_matching(int n, const std::vector<Graph::Edge>& matching);
std::vector<Graph::Edge> random_frame_matching(int n, uint64_t seed);

/// Seven-vertex graph whose unit-length embeddings are rigid up to isometry
/// and force one non-adjacent pair to unit distance; it has a valid drawing
/// with a single edge-length but is not a unit-distance graph.
Graph make_forced_unit();
/// The non-adjacent pair forced to unit distance in make_forced_unit().
Graph::Edge forced_unit_pair();

/// Cactus assembled from random cycles pasted at cut vertices; every block
/// is a cycle, so the result has no K4-minus-an-edge minor.
Graph make_random_cactus(int cycle_count, int max_cycle_len, uint64_t seed);

/// Series-parallel family with max degree 4: a binary tree whose left child
/// edges are doubled into two-edge parallel paths (diamonds), trimmed to
/// exactly n vertices.
Graph make_diamond_tree(int n);

/// Parses descriptors like "complete:10", "complete_bipartite:2,8",
/// "frame_with_matching:18,7" (seeded random matching), "forced_unit".
Graph parse_family(const std::string& descriptor);
std::vector<std::string> family_descriptors();

}  // namespace fewlen
