#include "fewlen/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace fewlen {

namespace {

int checked_vertex_count(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  return n;
}

}  // namespace

Graph::Graph(int n) : n_(checked_vertex_count(n)), adj_(static_cast<size_t>(n)) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(checked_vertex_count(n)) {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") with n=" + std::to_string(n_));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
  adj_.assign(static_cast<size_t>(n_), {});
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

const std::vector<int>& Graph::neighbors(int v) const { return adj_.at(static_cast<size_t>(v)); }

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  const auto& nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  return static_cast<int>(components().size()) == 1;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> result;
  std::vector<char> seen(static_cast<size_t>(n_), 0);
  for (int s = 0; s < n_; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[static_cast<size_t>(s)] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : neighbors(v)) {
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

bool Graph::is_tree() const { return n_ >= 1 && edge_count() == n_ - 1 && connected(); }

bool Graph::is_cycle() const {
  if (n_ < 3 || edge_count() != n_) return false;
  for (int v = 0; v < n_; ++v)
    if (degree(v) != 2) return false;
  return connected();
}

bool Graph::is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }

std::optional<std::pair<std::vector<int>, std::vector<int>>> Graph::bipartition() const {
  std::vector<int> colour(static_cast<size_t>(n_), -1);
  for (int s = 0; s < n_; ++s) {
    if (colour[static_cast<size_t>(s)] != -1) continue;
    colour[static_cast<size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : neighbors(v)) {
        if (colour[static_cast<size_t>(w)] == -1) {
          colour[static_cast<size_t>(w)] = 1 - colour[static_cast<size_t>(v)];
          q.push(w);
        } else if (colour[static_cast<size_t>(w)] == colour[static_cast<size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> classes;
  for (int v = 0; v < n_; ++v)
    (colour[static_cast<size_t>(v)] == 0 ? classes.first : classes.second).push_back(v);
  return classes;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> Graph::complete_bipartition() const {
  auto classes = bipartition();
  if (!classes) return std::nullopt;
  auto& [a, b] = *classes;
  if (a.empty() || b.empty()) return std::nullopt;
  if (edge_count() != static_cast<int>(a.size() * b.size())) return std::nullopt;
  if (a.size() > b.size()) std::swap(a, b);
  return classes;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  std::vector<Graph::Edge> edges;
  for (int v = 0; v < ng; ++v)
    for (const auto& [w, q] : h.edges()) edges.emplace_back(v * nh + w, v * nh + q);
  for (const auto& [v, p] : g.edges())
    for (int w = 0; w < nh; ++w) edges.emplace_back(v * nh + w, p * nh + w);
  return Graph(ng * nh, std::move(edges));
}

}  // namespace fewlen
