#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "drg/graph.hpp"

namespace drg {

/// Dense all-pairs distance table, row-major.
class DistanceTable {
 public:
  using Distance = std::uint32_t;

  DistanceTable() = default;
  explicit DistanceTable(std::size_t n) : n_(n), dist_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  Distance at(Vertex i, Vertex j) const { return dist_[i * n_ + j]; }
  Distance* row(Vertex i) { return dist_.data() + i * n_; }
  const Distance* row(Vertex i) const { return dist_.data() + i * n_; }

  std::size_t diameter() const;

  friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> dist_;
};

// One BFS per source vertex, sources distributed over OpenMP threads.
DistanceTable all_pairs_distances(const Graph& g);

// Single-threaded reference for all_pairs_distances.
DistanceTable all_pairs_distances_serial(const Graph& g);

}  // namespace drg
