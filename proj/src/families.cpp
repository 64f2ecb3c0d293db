#include "fewlen/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fewlen {

Graph make_complete(int n) {
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("class sizes must be non-negative");
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) edges.emplace_back(u, m + v);
  return Graph(m + n, std::move(edges));
}

Graph make_path(int n) {
  std::vector<Graph::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  auto edges = make_path(n).edges();
  edges.emplace_back(0, n - 1);
  return Graph(n, std::move(edges));
}

Graph make_hypercube(int d) {
  if (d < 0 || d > 20) throw std::invalid_argument("hypercube dimension out of range");
  int n = 1 << d;
  std::vector<Graph::Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
  return Graph(n, std::move(edges));
}

Graph make_random_tree(int n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> pruefer(static_cast<size_t>(n - 2));
  for (auto& p : pruefer) p = pick(rng);

  std::vector<int> degree(static_cast<size_t>(n), 1);
  for (int p : pruefer) ++degree[static_cast<size_t>(p)];
  std::vector<Graph::Edge> edges;
  // standard Pruefer decoding with a moving pointer over leaves
  int ptr = 0;
  while (degree[static_cast<size_t>(ptr)] != 1) ++ptr;
  int leaf = ptr;
  for (int p : pruefer) {
    edges.emplace_back(leaf, p);
    if (--degree[static_cast<size_t>(p)] == 1 && p < ptr) {
      leaf = p;
    } else {
      ++ptr;
      while (degree[static_cast<size_t>(ptr)] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph(n, std::move(edges));
}

Graph make_frame(int n) {
  if (n <= 0 || n % 6 != 0) throw std::invalid_argument("n must be ≡ 0 mod 6");
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= i + 2 && j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

std::vector<int> frame_matching_set(int n) {
  std::vector<int> s;
  for (int i = 0; i < n; i += 3) s.push_back(i);
  return s;
}

Graph make_frame_with_matching(int n, const std::vector<Graph::Edge>& matching) {
  Graph frame = make_frame(n);
  auto s = frame_matching_set(n);
  std::vector<char> in_s(static_cast<size_t>(n), 0);
  for (int v : s) in_s[static_cast<size_t>(v)] = 1;
  std::vector<int> used(static_cast<size_t>(n), 0);
  if (matching.size() * 2 != s.size())
    throw std::invalid_argument("matching must be perfect on the index-0-mod-3 set");
  for (auto [u, v] : matching) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n || !in_s[static_cast<size_t>(u)] ||
        !in_s[static_cast<size_t>(v)])
      throw std::invalid_argument("matching edge not on the index-0-mod-3 set");
    if (used[static_cast<size_t>(u)]++ || used[static_cast<size_t>(v)]++)
      throw std::invalid_argument("matching is not a matching: repeated vertex");
  }
  auto edges = frame.edges();
  for (auto [u, v] : matching) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

std::vector<Graph::Edge> random_frame_matching(int n, uint64_t seed) {
  auto s = frame_matching_set(n);
  if (s.size() % 2 != 0) throw std::invalid_argument("matching set has odd size");
  std::mt19937_64 rng(seed);
  std::shuffle(s.begin(), s.end(), rng);
  std::vector<Graph::Edge> matching;
  for (size_t i = 0; i + 1 < s.size(); i += 2) matching.emplace_back(s[i], s[i + 1]);
  return matching;
}

Graph make_forced_unit() {
  // Hexagonal wheel minus one rim edge. The hub is 0, rim 1..6 in circular
  // order (1,2,6,5,4,3); the missing rim edge is {2,6}; see forced_unit_pair.
  return Graph(7, {{0, 1},
                   {1, 2},
                   {0, 2},
                   {3, 0},
                   {3, 1},
                   {4, 3},
                   {4, 0},
                   {5, 4},
                   {5, 0},
                   {6, 5},
                   {6, 0}});
}

Graph::Edge forced_unit_pair() { return {2, 6}; }

Graph make_random_cactus(int cycle_count, int max_cycle_len, uint64_t seed) {
  if (cycle_count < 1) throw std::invalid_argument("need at least one cycle");
  if (max_cycle_len < 3) throw std::invalid_argument("cycles need length >= 3");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(3, max_cycle_len);
  std::vector<Graph::Edge> edges;
  int n = 0;
  for (int c = 0; c < cycle_count; ++c) {
    int len = len_dist(rng);
    int cut = -1;
    if (n > 0) {
      std::uniform_int_distribution<int> cut_dist(0, n - 1);
      cut = cut_dist(rng);
    }
    std::vector<int> ring;
    ring.reserve(static_cast<size_t>(len));
    if (cut >= 0) ring.push_back(cut);
    while (static_cast<int>(ring.size()) < len) ring.push_back(n++);
    for (int i = 0; i < len; ++i) edges.emplace_back(ring[static_cast<size_t>(i)],
                                                     ring[static_cast<size_t>((i + 1) % len)]);
  }
  return Graph(n, std::move(edges));
}

Graph make_diamond_tree(int n) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  std::vector<Graph::Edge> edges;
  int next = 1;
  // queue entries: (node, true if its parent link is a two-path diamond)
  std::vector<std::pair<int, bool>> queue{{0, false}};
  size_t head = 0;
  auto add_plain = [&](int u) {
    int c = next++;
    edges.emplace_back(u, c);
    queue.emplace_back(c, false);
  };
  auto add_diamond = [&](int u) {
    int a = next++, b = next++, c = next++;
    edges.emplace_back(u, a);
    edges.emplace_back(u, b);
    edges.emplace_back(a, b);
    edges.emplace_back(a, c);
    edges.emplace_back(b, c);
    queue.emplace_back(c, true);
  };
  while (head < queue.size() && next < n) {
    auto [u, via_diamond] = queue[head++];
    if (via_diamond) {
      // two vertex budget slots left on u: two plain children
      if (next < n) add_plain(u);
      if (next < n) add_plain(u);
    } else {
      if (n - next >= 3)
        add_diamond(u);
      else if (next < n)
        add_plain(u);
      if (next < n) add_plain(u);
    }
  }
  return Graph(n, std::move(edges));
}

namespace {

std::vector<long long> parse_args(const std::string& args, size_t expected,
                                  const std::string& name) {
  std::vector<long long> values;
  std::stringstream ss(args);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long long v = std::stoll(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad argument for family " + name);
    values.push_back(v);
  }
  if (values.size() != expected)
    throw std::invalid_argument("family " + name + " expects " + std::to_string(expected) +
                                " argument(s)");
  return values;
}

}  // namespace

Graph parse_family(const std::string& descriptor) {
  std::string name = descriptor;
  std::string args;
  if (auto colon = descriptor.find(':'); colon != std::string::npos) {
    name = descriptor.substr(0, colon);
    args = descriptor.substr(colon + 1);
  }
  if (name == "complete") {
    auto a = parse_args(args, 1, name);
    return make_complete(static_cast<int>(a[0]));
  }
  if (name == "complete_bipartite") {
    auto a = parse_args(args, 2, name);
    return make_complete_bipartite(static_cast<int>(a[0]), static_cast<int>(a[1]));
  }
  if (name == "path") {
    auto a = parse_args(args, 1, name);
    return make_path(static_cast<int>(a[0]));
  }
  if (name == "cycle") {
    auto a = parse_args(args, 1, name);
    return make_cycle(static_cast<int>(a[0]));
  }
  if (name == "hypercube") {
    auto a = parse_args(args, 1, name);
    return make_hypercube(static_cast<int>(a[0]));
  }
  if (name == "random_tree") {
    auto a = parse_args(args, 2, name);
    return make_random_tree(static_cast<int>(a[0]), static_cast<uint64_t>(a[1]));
  }
  if (name == "frame") {
    auto a = parse_args(args, 1, name);
    return make_frame(static_cast<int>(a[0]));
  }
  if (name == "frame_with_matching") {
    auto a = parse_args(args, 2, name);
    int n = static_cast<int>(a[0]);
    return make_frame_with_matching(n, random_frame_matching(n, static_cast<uint64_t>(a[1])));
  }
  if (name == "forced_unit") {
    if (!args.empty()) throw std::invalid_argument("forced_unit takes no arguments");
    return make_forced_unit();
  }
  if (name == "cactus") {
    auto a = parse_args(args, 3, name);
    return make_random_cactus(static_cast<int>(a[0]), static_cast<int>(a[1]),
                              static_cast<uint64_t>(a[2]));
  }
  if (name == "diamond_tree") {
    auto a = parse_args(args, 1, name);
    return make_diamond_tree(static_cast<int>(a[0]));
  }
  throw std::invalid_argument("unknown family: " + name);
}

std::vector<std::string> family_descriptors() {
  return {
      "complete:n",
      "complete_bipartite:m,n",
      "path:n",
      "cycle:n",
      "hypercube:d",
      "random_tree:n,seed",
      "frame:n            (n ≡ 0 mod 6)",
      "frame_with_matching:n,seed",
      "forced_unit",
      "cactus:cycles,max_len,seed",
      "diamond_tree:n",
  };
}

}  // namespace fewlen
