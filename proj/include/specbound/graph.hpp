#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace specbound {

class SymmetricMatrix;

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored as unordered pairs normalized to (u, v) with u < v and
/// kept sorted, so two graphs with the same edge set compare equal. A dense
/// adjacency bitmap backs O(1) adjacency queries.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Throws ArgumentError on self-loops, duplicate edges or out-of-range
  /// endpoints.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Unordered edges, (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;

  /// Ordered adjacent pairs: both (u, v) and (v, u) for every edge. Its size
  /// is 2m.
  std::vector<Edge> ordered_edges() const;

  /// Unordered pairs {u, v}, u < v, that are not edges.
  std::vector<Edge> non_adjacent_pairs() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<bool> adjacency_;
};

Graph complement(const Graph& g);

/// 0/1 adjacency matrix A with zero diagonal.
SymmetricMatrix adjacency_matrix(const Graph& g);

/// Adjacency matrix of the complement, Ā = J - I - A.
SymmetricMatrix complement_adjacency_matrix(const Graph& g);

bool is_bipartite(const Graph& g);

}  // namespace specbound
