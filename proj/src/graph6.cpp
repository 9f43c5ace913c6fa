#include "specbound/graph6.hpp"

#include <cstdint>

#include "specbound/errors.hpp"

namespace specbound {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeaderPrefix = ">>graph6<<";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

// Reads `count` 6-bit groups starting at `pos` as a big-endian integer.
std::uint64_t read_groups(std::string_view s, std::size_t base, std::size_t pos,
                          std::size_t count) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (pos + i >= s.size()) throw ParseError("truncated graph6 size header", base + pos + i);
    const auto c = static_cast<unsigned char>(s[pos + i]);
    if (c < 63 || c > 126) {
      throw ParseError("byte outside the graph6 range [63,126]", base + pos + i);
    }
    value = (value << 6) | static_cast<std::uint64_t>(c - kBias);
  }
  return value;
}

void append_groups(std::string& out, std::uint64_t value, std::size_t count) {
  for (std::size_t i = count; i-- > 0;) {
    out.push_back(static_cast<char>(kBias + ((value >> (6 * i)) & 0x3f)));
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeaderPrefix)) {
    base = kHeaderPrefix.size();
    text.remove_prefix(kHeaderPrefix.size());
  }
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", base);

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = read_groups(text, base, 0, 1);
    pos = 1;
  } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
    n = read_groups(text, base, 2, 6);
    pos = 8;
  } else {
    n = read_groups(text, base, 1, 3);
    pos = 4;
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t chars = (bits + 5) / 6;
  const std::size_t available = text.size() - pos;
  if (available < chars) {
    throw ParseError("truncated graph6 adjacency data: expected " + std::to_string(chars) +
                         " bytes, found " + std::to_string(available),
                     base + text.size());
  }
  if (available > chars) {
    throw ParseError("trailing data after graph6 adjacency bytes", base + pos + chars);
  }

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u, ++bit) {
      const std::size_t at = pos + bit / 6;
      const auto c = static_cast<unsigned char>(text[at]);
      if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range [63,126]", base + at);
      if (((c - kBias) >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t at = pos + chars - 1;
    const auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range [63,126]", base + at);
    const unsigned padding_mask = (1u << (6 - bits % 6)) - 1;
    if (((c - kBias) & padding_mask) != 0) {
      throw ParseError("non-zero graph6 padding bits", base + at);
    }
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const std::uint64_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    append_groups(out, n, 1);
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    append_groups(out, n, 3);
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(126));
    append_groups(out, n, 6);
  }

  unsigned group = 0;
  unsigned filled = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (group << (6 - filled))));
  return out;
}

std::vector<Graph6Line> read_graph6_stream(std::istream& in) {
  std::vector<Graph6Line> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view(line);
    while (!view.empty() && is_space(view.back())) view.remove_suffix(1);
    if (view.empty() || view == kHeaderPrefix) continue;
    try {
      out.push_back({number, parse_graph6(view)});
    } catch (const ParseError& e) {
      throw ArgumentError("line " + std::to_string(number) + ": " + e.what());
    } catch (const ArgumentError& e) {
      throw ArgumentError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace specbound
