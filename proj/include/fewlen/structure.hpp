#pragma once

#include <string>
#include <vector>

#include "fewlen/graph.hpp"

namespace fewlen {

/// Vertex ordering sigma: V -> {1..n}; sigma[v] is the label of v.
struct VertexOrdering {
  std::vector<int> sigma;

  bool valid_for(const Graph& g) const;
  static VertexOrdering identity(int n);
  /// positions[k] = vertex with label k+1.
  std::vector<int> positions() const;
};

/// max |sigma(v) - sigma(w)| over edges; 0 when there are no edges.
int ordering_width(const Graph& g, const VertexOrdering& ord);
/// max min{|sigma(v)-sigma(w)|, n - |sigma(v)-sigma(w)|} over edges.
int ordering_cyclic_width(const Graph& g, const VertexOrdering& ord);

/// Heuristic low-width ordering. Candidates are Cuthill-McKee level orderings
/// from pseudo-peripheral starts plus a DFS traversal order; the candidate
/// with the smallest cyclic width wins (ties: smaller width, then the earlier
/// candidate). Deterministic: neighbour scans break ties by lowest index.
VertexOrdering bandwidth_ordering(const Graph& g);

struct Block {
  std::vector<int> vertices;        // sorted
  std::vector<Graph::Edge> edges;   // sorted, normalized
  bool is_edge() const { return edges.size() == 1; }
  bool is_cycle() const { return vertices.size() >= 3 && edges.size() == vertices.size(); }
};

struct BlockDecomposition {
  /// Ordered so each block after the first meets the union of its
  /// predecessors (within its component) in exactly one cut vertex.
  std::vector<Block> blocks;
  std::vector<int> cut_vertices;  // sorted
  bool disconnected_input = false;
};

BlockDecomposition block_decomposition(const Graph& g);

struct K4MinusFreeResult {
  bool free = true;
  /// On failure, a vertex of degree >= 3 inside a block that is neither an
  /// edge nor a cycle; -1 otherwise.
  int witness = -1;
};

/// A graph has no K4-minus-an-edge minor iff every block is an edge or a cycle.
K4MinusFreeResult is_k4minus_free(const Graph& g);

struct HPartition {
  std::vector<std::vector<int>> parts;  // nonempty, disjoint, cover V(G)
  Graph quotient;                       // on {0..parts.size()-1}

  int width() const;
  /// part_of[v] = index of the part containing v.
  std::vector<int> part_of(int n) const;
};

/// Throws std::invalid_argument if parts are empty/overlapping/not covering
/// or the quotient edge rule is violated. Independent of the constructions.
void validate_hpartition(const Graph& g, const HPartition& p);

/// BFS-layer partition refined so the quotient is a tree: within layer i the
/// parts are the traces of the connected components of the subgraph induced
/// by layers >= i. Requires g connected.
HPartition tree_partition(const Graph& g);

/// BFS layers as whole parts; the quotient is a path. Requires g connected.
HPartition path_partition(const Graph& g);

}  // namespace fewlen
