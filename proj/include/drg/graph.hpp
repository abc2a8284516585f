#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace drg {

using Vertex = std::size_t;

/// Simple connected undirected graph on vertices 0..n-1.
///
/// Construction verifies symmetry, absence of loops and multi-edges, and
/// connectivity. Instances are immutable afterwards.
class Graph {
 public:
  /// Builds from an undirected edge list. Duplicate edges (in either
  /// orientation) are merged. Throws SelfLoop, InvalidVertex, TooSmall or
  /// NotConnected.
  static Graph from_edges(std::size_t vertex_count,
                          const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  explicit Graph(std::vector<std::vector<Vertex>> adjacency, std::size_t edges)
      : adjacency_(std::move(adjacency)), edge_count_(edges) {}

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Sparse symmetric 0/1 matrix A_k: row i holds the vertices at distance
/// exactly k from i, sorted.
struct DistanceKMatrix {
  std::size_t k = 0;
  std::vector<std::vector<Vertex>> rows;

  std::size_t size() const noexcept { return rows.size(); }
  bool entry(Vertex i, Vertex j) const;
  bool is_zero() const;
};

/// Parses lines "u v" of 0-based integers. '#' starts a comment line and
/// blank lines are skipped. Vertices are 0..max index.
Graph parse_edge_list(std::string_view text);

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

DistanceKMatrix distance_k_matrix(const Graph& g, std::size_t k);

std::size_t degree_k(const Graph& g, Vertex v, std::size_t k);

// Half the number of ordered adjacent pairs (u, w) with both u and w at
// distance k from v.
std::size_t isoscycle_count(const Graph& g, Vertex v, std::size_t k);

std::size_t eccentricity(const Graph& g, Vertex v);
std::size_t diameter(const Graph& g);

}  // namespace drg
