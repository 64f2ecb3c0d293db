#pragma once

// Brute-force reference implementations used only by tests. They stay
// independent of the library code paths they cross-check.

#include <vector>

#include "fewlen/graph.hpp"

namespace fewlen::oracle {

/// Minor test by exhaustive contraction: does g contain K4-minus-an-edge as
/// a minor? Intended for n <= 7.
bool has_k4minus_minor(const Graph& g);

/// Exact bandwidth by trying all n! orderings (n <= 8).
int exact_bandwidth(const Graph& g);

/// Articulation points by deleting each vertex and counting components.
std::vector<int> articulation_points_brute(const Graph& g);

/// All connected labelled graphs on n vertices (n <= 6).
std::vector<Graph> all_connected_graphs(int n);

}  // namespace fewlen::oracle
