#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "fewlen/graph.hpp"

namespace fewlen {

/// Parse failure; byte_offset points at the offending byte of the input.
class graph6_error : public std::runtime_error {
public:
  graph6_error(const std::string& what, size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  size_t byte_offset() const { return byte_offset_; }

private:
  size_t byte_offset_;
};

/// graph6 interchange format. Accepts an optional ">>graph6<<" prefix and
/// ignores a trailing newline. Sizes up to the 8-byte header form.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Fallback text format: one "u v" pair per line, '#' comments allowed.
/// Vertex count is one past the largest index mentioned.
Graph parse_edge_list(std::string_view text);

/// Reads a graph from file content: edge-list if every non-comment line is a
/// pair of integers, graph6 otherwise.
Graph parse_graph_auto(std::string_view text);

}  // namespace fewlen
