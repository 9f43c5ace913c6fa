#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "specbound/graph.hpp"

namespace specbound {

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and trailing
/// whitespace are ignored. Both the short header (n <= 62) and the long
/// headers (126 + 3 or 126 126 + 6 bytes) are accepted.
///
/// Throws ParseError naming the byte offset of the first bad character: a
/// byte outside [63, 126], a truncated or over-long bit stream, or non-zero
/// padding bits.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding: minimal header, zero padding, no newline.
std::string write_graph6(const Graph& g);

struct Graph6Line {
  std::size_t line_number;  // 1-based
  Graph graph;
};

/// Reads every non-blank line of a graph6 corpus. A ParseError is rethrown
/// as an ArgumentError whose message carries the line number.
std::vector<Graph6Line> read_graph6_stream(std::istream& in);

}  // namespace specbound
