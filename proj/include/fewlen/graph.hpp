#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fewlen {

/// Labelled simple undirected graph on vertex set {0..n-1}.
/// Immutable after construction; safe for concurrent reads.
class Graph {
public:
  using Edge = std::pair<int, int>;  // stored normalized, first < second

  Graph() = default;
  explicit Graph(int n);
  /// Validates: indices in range, no self-loops, no duplicate edges.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Edges sorted lexicographically; the index into this vector is the
  /// canonical edge id used by drawings and length classifications.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  int max_degree() const;

  bool connected() const;
  std::vector<std::vector<int>> components() const;

  bool is_tree() const;
  bool is_cycle() const;
  bool is_complete() const;

  /// Colour classes (A, B) of a proper 2-colouring, or nullopt if odd cycle.
  /// Vertex 0 of each component goes to A; classes sorted ascending.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition() const;

  /// Classes (A, B) with |A| <= |B| if the graph is a complete bipartite
  /// graph with every class nonempty, nullopt otherwise.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> complete_bipartition() const;

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// G box H: vertex (v,w) -> v * H.n + w.
Graph cartesian_product(const Graph& g, const Graph& h);

}  // namespace fewlen
