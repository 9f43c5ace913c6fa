#include "specbound/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "specbound/errors.hpp"
#include "specbound/matrix.hpp"

namespace specbound {

Graph::Graph(std::size_t n) : n_(n), adjacency_(n * n, false) {}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ArgumentError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} has an endpoint outside 0.." + std::to_string(n));
    }
    if (u == v) {
      throw ArgumentError("self-loop at vertex " + std::to_string(u));
    }
    if (adjacency_[u * n + v]) {
      throw ArgumentError("duplicate edge {" + std::to_string(u) + "," +
                          std::to_string(v) + "}");
    }
    adjacency_[u * n + v] = true;
    adjacency_[v * n + u] = true;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) throw ArgumentError("vertex out of range");
  return adjacency_[u * n_ + v];
}

std::size_t Graph::degree(Vertex v) const {
  if (v >= n_) throw ArgumentError("vertex out of range");
  std::size_t d = 0;
  for (std::size_t u = 0; u < n_; ++u) d += adjacency_[v * n_ + u] ? 1 : 0;
  return d;
}

std::vector<Edge> Graph::ordered_edges() const {
  std::vector<Edge> out;
  out.reserve(2 * edges_.size());
  for (auto [u, v] : edges_) {
    out.emplace_back(u, v);
    out.emplace_back(v, u);
  }
  return out;
}

std::vector<Edge> Graph::non_adjacent_pairs() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (!adjacency_[u * n_ + v]) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  return Graph(g.vertex_count(), g.non_adjacent_pairs());
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix a(g.vertex_count());
  for (auto [u, v] : g.edges()) a.set(u, v, 1.0);
  return a;
}

SymmetricMatrix complement_adjacency_matrix(const Graph& g) {
  SymmetricMatrix a(g.vertex_count());
  for (auto [u, v] : g.non_adjacent_pairs()) a.set(u, v, 1.0);
  return a;
}

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<std::size_t> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (!g.adjacent(u, v)) continue;
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          frontier.push(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace specbound
