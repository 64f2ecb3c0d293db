#include "fewlen/graph6.hpp"

#include <cctype>
#include <sstream>

namespace fewlen {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

int sextet(std::string_view s, size_t pos, size_t base) {
  if (pos >= s.size()) throw graph6_error("truncated graph6 stream", base + s.size());
  unsigned char c = static_cast<unsigned char>(s[pos]);
  if (c < kBias || c > kMaxByte) throw graph6_error("character out of graph6 range", base + pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  size_t base = 0;
  if (text.substr(0, 10) == ">>graph6<<") base = 10;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::string_view s = text.substr(base);
  if (s.empty()) throw graph6_error("empty graph6 input", base);

  size_t pos = 0;
  long long n = 0;
  if (s[pos] != '~') {
    n = sextet(s, pos, base);
    ++pos;
  } else {
    ++pos;
    if (pos < s.size() && s[pos] == '~') {
      ++pos;
      for (int i = 0; i < 6; ++i) n = (n << 6) | sextet(s, pos + static_cast<size_t>(i), base);
      pos += 6;
    } else {
      for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(s, pos + static_cast<size_t>(i), base);
      pos += 3;
    }
  }
  if (n > 100000) throw graph6_error("vertex count too large for this tool", base);

  const int nn = static_cast<int>(n);
  std::vector<Graph::Edge> edges;
  long long bits_needed = n * (n - 1) / 2;
  int bit_in_byte = 0;
  int current = 0;
  long long bit_index = 0;
  for (int v = 1; v < nn; ++v) {
    for (int u = 0; u < v; ++u) {
      if (bit_in_byte == 0) {
        current = sextet(s, pos, base);
        ++pos;
        bit_in_byte = 6;
      }
      if (current & (1 << (bit_in_byte - 1))) edges.emplace_back(u, v);
      --bit_in_byte;
      ++bit_index;
    }
  }
  (void)bits_needed;
  if (pos != s.size()) throw graph6_error("trailing bytes after graph6 data", base + pos);
  return Graph(nn, std::move(edges));
}

std::string write_graph6(const Graph& g) {
  std::string out;
  long long n = g.vertex_count();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  } else {
    out.push_back('~');
    out.push_back('~');
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  }
  int acc = 0;
  int bits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Graph::Edge> edges;
  int max_vertex = -1;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v))
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": expected two vertex indices");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_vertex = std::max({max_vertex, static_cast<int>(u), static_cast<int>(v)});
  }
  return Graph(max_vertex + 1, std::move(edges));
}

Graph parse_graph_auto(std::string_view text) {
  bool looks_like_edges = false;
  bool has_content = false;
  std::istringstream in{std::string(text)};
  std::string line;
  looks_like_edges = true;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;
    has_content = true;
    if (!(ls >> v)) {
      looks_like_edges = false;
      break;
    }
  }
  if (has_content && looks_like_edges) return parse_edge_list(text);
  return parse_graph6(text);
}

}  // namespace fewlen
