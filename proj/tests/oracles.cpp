#include "oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <map>
#include <set>
#include <stdexcept>

namespace fewlen::oracle {

namespace {

// K4 minus one edge on branch vertices {a,b,c,d}: all pairs adjacent except
// possibly cd. A subgraph check over all ordered choices of the missing pair.
bool has_k4minus_subgraph(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> verts(static_cast<size_t>(n));
  std::iota(verts.begin(), verts.end(), 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        for (int d = c + 1; d < n; ++d) {
          if (d == a || d == b) continue;
          // a,b are the degree-3 vertices; cd may be absent
          if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(a, d) && g.has_edge(b, c) &&
              g.has_edge(b, d))
            return true;
        }
      }
  return false;
}

Graph contract_edge(const Graph& g, int u, int v) {
  // contract v into u, relabel to keep vertices 0..n-2
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<size_t>(n));
  int next = 0;
  for (int w = 0; w < n; ++w) label[static_cast<size_t>(w)] = (w == v) ? -1 : next++;
  std::set<Graph::Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (a == v) a = u;
    if (b == v) b = u;
    if (a == b) continue;
    int la = label[static_cast<size_t>(a)], lb = label[static_cast<size_t>(b)];
    edges.insert({std::min(la, lb), std::max(la, lb)});
  }
  return Graph(n - 1, {edges.begin(), edges.end()});
}

}  // namespace

namespace {

uint64_t graph_key(const Graph& g) {
  uint64_t mask = 0;
  int slot = 0;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v, ++slot)
      if (g.has_edge(u, v)) mask |= (1ULL << slot);
  return (static_cast<uint64_t>(g.vertex_count()) << 56) | mask;
}

}  // namespace

bool has_k4minus_minor(const Graph& g) {
  if (g.vertex_count() < 4 || g.edge_count() < 5) return false;
  if (g.vertex_count() > 10) throw std::invalid_argument("minor oracle supports n <= 10");
  static std::map<uint64_t, bool> memo;  // shared across calls; contractions repeat a lot
  auto key = graph_key(g);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool found = has_k4minus_subgraph(g);
  if (!found)
    for (const auto& [u, v] : g.edges())
      if (has_k4minus_minor(contract_edge(g, u, v))) {
        found = true;
        break;
      }
  memo[key] = found;
  return found;
}

int exact_bandwidth(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 8) throw std::invalid_argument("exact bandwidth oracle supports n <= 8");
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int best = n;
  do {
    int width = 0;
    for (const auto& [u, v] : g.edges())
      width = std::max(width, std::abs(perm[static_cast<size_t>(u)] - perm[static_cast<size_t>(v)]));
    best = std::min(best, width);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<int> articulation_points_brute(const Graph& g) {
  const int n = g.vertex_count();
  auto component_count = [&](int skip) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    if (skip >= 0) seen[static_cast<size_t>(skip)] = 1;
    int comps = 0;
    for (int s = 0; s < n; ++s) {
      if (seen[static_cast<size_t>(s)]) continue;
      ++comps;
      std::queue<int> q;
      q.push(s);
      seen[static_cast<size_t>(s)] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
          if (!seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = 1;
            q.push(w);
          }
      }
    }
    return comps;
  };
  const int base = component_count(-1);
  std::vector<int> cuts;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 0 && component_count(v) > base) cuts.push_back(v);
  return cuts;
}

std::vector<Graph> all_connected_graphs(int n) {
  if (n > 6) throw std::invalid_argument("graph enumeration oracle supports n <= 6");
  std::vector<Graph::Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (unsigned long mask = 0; mask < (1UL << slots.size()); ++mask) {
    std::vector<Graph::Edge> edges;
    for (size_t b = 0; b < slots.size(); ++b)
      if (mask & (1UL << b)) edges.push_back(slots[b]);
    Graph g(n, std::move(edges));
    if (g.connected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace fewlen::oracle
