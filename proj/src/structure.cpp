#include "fewlen/structure.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace fewlen {

bool VertexOrdering::valid_for(const Graph& g) const {
  const int n = g.vertex_count();
  if (static_cast<int>(sigma.size()) != n) return false;
  std::vector<char> seen(static_cast<size_t>(n + 1), 0);
  for (int label : sigma) {
    if (label < 1 || label > n || seen[static_cast<size_t>(label)]) return false;
    seen[static_cast<size_t>(label)] = 1;
  }
  return true;
}

VertexOrdering VertexOrdering::identity(int n) {
  VertexOrdering ord;
  ord.sigma.resize(static_cast<size_t>(n));
  std::iota(ord.sigma.begin(), ord.sigma.end(), 1);
  return ord;
}

std::vector<int> VertexOrdering::positions() const {
  std::vector<int> pos(sigma.size());
  for (size_t v = 0; v < sigma.size(); ++v) pos[static_cast<size_t>(sigma[v] - 1)] = static_cast<int>(v);
  return pos;
}

int ordering_width(const Graph& g, const VertexOrdering& ord) {
  if (!ord.valid_for(g)) throw std::invalid_argument("ordering is not a bijection onto 1..n");
  int w = 0;
  for (const auto& [u, v] : g.edges())
    w = std::max(w, std::abs(ord.sigma[static_cast<size_t>(u)] - ord.sigma[static_cast<size_t>(v)]));
  return w;
}

int ordering_cyclic_width(const Graph& g, const VertexOrdering& ord) {
  if (!ord.valid_for(g)) throw std::invalid_argument("ordering is not a bijection onto 1..n");
  const int n = g.vertex_count();
  int w = 0;
  for (const auto& [u, v] : g.edges()) {
    int gap = std::abs(ord.sigma[static_cast<size_t>(u)] - ord.sigma[static_cast<size_t>(v)]);
    w = std::max(w, std::min(gap, n - gap));
  }
  return w;
}

namespace {

// BFS from start; returns visit order with neighbours expanded by
// (degree, index) when by_degree, else by index.
std::vector<int> level_order(const Graph& g, int start, const std::vector<char>& in_comp,
                             bool by_degree) {
  std::vector<int> order;
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  std::queue<int> q;
  q.push(start);
  seen[static_cast<size_t>(start)] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    order.push_back(v);
    std::vector<int> nbrs;
    for (int w : g.neighbors(v))
      if (in_comp[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) nbrs.push_back(w);
    if (by_degree)
      std::sort(nbrs.begin(), nbrs.end(), [&](int a, int b) {
        return std::make_pair(g.degree(a), a) < std::make_pair(g.degree(b), b);
      });
    for (int w : nbrs) {
      seen[static_cast<size_t>(w)] = 1;
      q.push(w);
    }
  }
  return order;
}

int farthest_vertex(const Graph& g, int start, const std::vector<char>& in_comp) {
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
  std::queue<int> q;
  q.push(start);
  dist[static_cast<size_t>(start)] = 0;
  int best = start;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (std::make_pair(dist[static_cast<size_t>(v)], -v) >
        std::make_pair(dist[static_cast<size_t>(best)], -best))
      best = v;
    for (int w : g.neighbors(v))
      if (in_comp[static_cast<size_t>(w)] && dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        q.push(w);
      }
  }
  return best;
}

std::vector<int> dfs_preorder(const Graph& g, int start, const std::vector<char>& in_comp) {
  std::vector<int> order;
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<int> stack{start};
  seen[static_cast<size_t>(start)] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    // push in reverse so the lowest index is expanded first
    const auto& nbrs = g.neighbors(v);
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it)
      if (in_comp[static_cast<size_t>(*it)] && !seen[static_cast<size_t>(*it)]) {
        seen[static_cast<size_t>(*it)] = 1;
        stack.push_back(*it);
      }
  }
  return order;
}

VertexOrdering ordering_from_visit(const Graph& g, const std::vector<int>& visit) {
  VertexOrdering ord;
  ord.sigma.assign(static_cast<size_t>(g.vertex_count()), 0);
  int label = 1;
  for (int v : visit) ord.sigma[static_cast<size_t>(v)] = label++;
  return ord;
}

}  // namespace

VertexOrdering bandwidth_ordering(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return VertexOrdering{};
  std::vector<char> in_comp(static_cast<size_t>(n), 0);
  auto comps = g.components();

  // three whole-graph candidates, components concatenated
  std::vector<std::vector<int>> candidates(3);
  for (const auto& comp : comps) {
    std::fill(in_comp.begin(), in_comp.end(), 0);
    for (int v : comp) in_comp[static_cast<size_t>(v)] = 1;
    int start = farthest_vertex(g, comp[0], in_comp);
    auto cm = level_order(g, start, in_comp, true);
    auto rcm = cm;
    std::reverse(rcm.begin(), rcm.end());
    auto dfs = dfs_preorder(g, comp[0], in_comp);
    candidates[0].insert(candidates[0].end(), cm.begin(), cm.end());
    candidates[1].insert(candidates[1].end(), rcm.begin(), rcm.end());
    candidates[2].insert(candidates[2].end(), dfs.begin(), dfs.end());
  }

  VertexOrdering best;
  std::pair<int, int> best_score{-1, -1};
  for (const auto& visit : candidates) {
    auto ord = ordering_from_visit(g, visit);
    std::pair<int, int> score{ordering_cyclic_width(g, ord), ordering_width(g, ord)};
    if (best_score.first < 0 || score < best_score) {
      best_score = score;
      best = std::move(ord);
    }
  }
  return best;
}

BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.vertex_count();
  BlockDecomposition result;
  result.disconnected_input = !g.connected();

  std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<Graph::Edge> edge_stack;
  std::vector<std::pair<Block, int>> blocks_with_anchor;  // anchor = min disc time
  int timer = 0;

  struct Frame {
    int v;
    int parent;
    size_t idx = 0;
    int children = 0;
  };

  auto close_block = [&](Graph::Edge boundary) {
    Block b;
    std::set<int> verts;
    while (!edge_stack.empty()) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      b.edges.push_back({std::min(e.first, e.second), std::max(e.first, e.second)});
      verts.insert(e.first);
      verts.insert(e.second);
      if (e == boundary) break;
    }
    b.vertices.assign(verts.begin(), verts.end());
    std::sort(b.edges.begin(), b.edges.end());
    int anchor = *std::min_element(b.vertices.begin(), b.vertices.end(), [&](int a, int c) {
      return disc[static_cast<size_t>(a)] < disc[static_cast<size_t>(c)];
    });
    blocks_with_anchor.push_back({std::move(b), anchor});
  };

  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<size_t>(root)] != -1) continue;
    std::vector<Frame> stack;
    disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
    stack.push_back({root, -1});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.idx < nbrs.size()) {
        int w = nbrs[f.idx++];
        if (w == f.parent) continue;
        if (disc[static_cast<size_t>(w)] == -1) {
          disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
          edge_stack.push_back({f.v, w});
          ++f.children;
          stack.push_back({w, f.v});
        } else if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(f.v)]) {
          edge_stack.push_back({f.v, w});
          low[static_cast<size_t>(f.v)] =
              std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
        }
      } else {
        int v = f.v;
        int parent = f.parent;
        stack.pop_back();
        if (parent >= 0) {
          low[static_cast<size_t>(parent)] =
              std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(v)]);
          if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(parent)]) close_block({parent, v});
        }
      }
    }
  }

  // A vertex is a cut vertex iff it lies in at least two blocks.
  std::map<int, int> block_count;
  for (const auto& [b, anchor] : blocks_with_anchor)
    for (int v : b.vertices) ++block_count[v];
  for (auto [v, cnt] : block_count)
    if (cnt >= 2) result.cut_vertices.push_back(v);

  std::stable_sort(blocks_with_anchor.begin(), blocks_with_anchor.end(),
                   [&](const auto& a, const auto& b) {
                     int da = disc[static_cast<size_t>(a.second)];
                     int db = disc[static_cast<size_t>(b.second)];
                     if (da != db) return da < db;
                     auto second_disc = [&](const Block& blk, int anchor) {
                       int best = std::numeric_limits<int>::max();
                       for (int v : blk.vertices)
                         if (v != anchor) best = std::min(best, disc[static_cast<size_t>(v)]);
                       return best;
                     };
                     return second_disc(a.first, a.second) < second_disc(b.first, b.second);
                   });
  for (auto& [b, anchor] : blocks_with_anchor) result.blocks.push_back(std::move(b));
  return result;
}

K4MinusFreeResult is_k4minus_free(const Graph& g) {
  auto decomp = block_decomposition(g);
  for (const auto& b : decomp.blocks) {
    if (b.is_edge() || b.is_cycle()) continue;
    std::map<int, int> deg;
    for (const auto& [u, v] : b.edges) {
      ++deg[u];
      ++deg[v];
    }
    for (auto [v, d] : deg)
      if (d >= 3) return {false, v};
    return {false, b.vertices.front()};  // unreachable for 2-connected blocks
  }
  return {true, -1};
}

int HPartition::width() const {
  size_t w = 0;
  for (const auto& p : parts) w = std::max(w, p.size());
  return static_cast<int>(w);
}

std::vector<int> HPartition::part_of(int n) const {
  std::vector<int> owner(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < parts.size(); ++i)
    for (int v : parts[i]) {
      if (v < 0 || v >= n) throw std::invalid_argument("part vertex out of range");
      if (owner[static_cast<size_t>(v)] != -1) throw std::invalid_argument("parts overlap");
      owner[static_cast<size_t>(v)] = static_cast<int>(i);
    }
  return owner;
}

void validate_hpartition(const Graph& g, const HPartition& p) {
  if (p.quotient.vertex_count() != static_cast<int>(p.parts.size()))
    throw std::invalid_argument("quotient order differs from number of parts");
  for (const auto& part : p.parts)
    if (part.empty()) throw std::invalid_argument("empty part");
  auto owner = p.part_of(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (owner[static_cast<size_t>(v)] == -1)
      throw std::invalid_argument("vertex " + std::to_string(v) + " not covered by any part");
  std::set<Graph::Edge> expected;
  for (const auto& [u, v] : g.edges()) {
    int a = owner[static_cast<size_t>(u)], b = owner[static_cast<size_t>(v)];
    if (a != b) expected.insert({std::min(a, b), std::max(a, b)});
  }
  std::set<Graph::Edge> actual(p.quotient.edges().begin(), p.quotient.edges().end());
  if (expected != actual)
    throw std::invalid_argument("quotient edges do not match the partition-induced edges");
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

std::vector<int> bfs_layers(const Graph& g) {
  if (!g.connected()) throw std::invalid_argument("graph must be connected");
  std::vector<int> layer(static_cast<size_t>(g.vertex_count()), -1);
  std::queue<int> q;
  q.push(0);
  layer[0] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (layer[static_cast<size_t>(w)] < 0) {
        layer[static_cast<size_t>(w)] = layer[static_cast<size_t>(v)] + 1;
        q.push(w);
      }
  }
  return layer;
}

Graph quotient_of(const Graph& g, const std::vector<std::vector<int>>& parts) {
  std::vector<int> owner(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < parts.size(); ++i)
    for (int v : parts[i]) owner[static_cast<size_t>(v)] = static_cast<int>(i);
  std::set<Graph::Edge> qedges;
  for (const auto& [u, v] : g.edges()) {
    int a = owner[static_cast<size_t>(u)], b = owner[static_cast<size_t>(v)];
    if (a != b) qedges.insert({std::min(a, b), std::max(a, b)});
  }
  return Graph(static_cast<int>(parts.size()), {qedges.begin(), qedges.end()});
}

}  // namespace

HPartition tree_partition(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("graph must be non-empty");
  auto layer = bfs_layers(g);
  int max_layer = *std::max_element(layer.begin(), layer.end());

  // Components of the subgraph induced by layers >= i, built deepest-first.
  Dsu dsu(n);
  std::vector<std::vector<std::vector<int>>> layer_parts(static_cast<size_t>(max_layer + 1));
  for (int i = max_layer; i >= 0; --i) {
    for (const auto& [u, v] : g.edges())
      if (std::min(layer[static_cast<size_t>(u)], layer[static_cast<size_t>(v)]) == i)
        dsu.unite(u, v);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v)
      if (layer[static_cast<size_t>(v)] == i) groups[dsu.find(v)].push_back(v);
    for (auto& [root, verts] : groups) {
      std::sort(verts.begin(), verts.end());
      layer_parts[static_cast<size_t>(i)].push_back(verts);
    }
    std::sort(layer_parts[static_cast<size_t>(i)].begin(), layer_parts[static_cast<size_t>(i)].end());
  }

  HPartition part;
  for (const auto& per_layer : layer_parts)
    for (const auto& p : per_layer) part.parts.push_back(p);
  part.quotient = quotient_of(g, part.parts);
  // the layered-component rule forces a tree quotient
  if (part.quotient.edge_count() != static_cast<int>(part.parts.size()) - 1 ||
      !part.quotient.connected())
    throw std::logic_error("tree partition produced a non-tree quotient");
  return part;
}

HPartition path_partition(const Graph& g) {
  auto layer = bfs_layers(g);
  int max_layer = *std::max_element(layer.begin(), layer.end());
  HPartition part;
  part.parts.assign(static_cast<size_t>(max_layer + 1), {});
  for (int v = 0; v < g.vertex_count(); ++v)
    part.parts[static_cast<size_t>(layer[static_cast<size_t>(v)])].push_back(v);
  part.quotient = quotient_of(g, part.parts);
  return part;
}

}  // namespace fewlen
