#include "drg/distance_table.hpp"

#include <algorithm>
#include <limits>

namespace drg {
namespace {

constexpr DistanceTable::Distance kUnseen =
    std::numeric_limits<DistanceTable::Distance>::max();

// Fills one row; `queue` is caller-owned scratch of size n.
void bfs_row(const Graph& g, Vertex source, DistanceTable::Distance* out,
             std::vector<Vertex>& queue) {
  const std::size_t n = g.vertex_count();
  std::fill(out, out + n, kUnseen);
  out[source] = 0;
  std::size_t head = 0, tail = 0;
  queue[tail++] = source;
  while (head < tail) {
    const Vertex u = queue[head++];
    const auto next = out[u] + 1;
    for (Vertex w : g.neighbors(u)) {
      if (out[w] == kUnseen) {
        out[w] = next;
        queue[tail++] = w;
      }
    }
  }
}

}  // namespace

std::size_t DistanceTable::diameter() const {
  if (dist_.empty()) return 0;
  return *std::max_element(dist_.begin(), dist_.end());
}

DistanceTable all_pairs_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DistanceTable table(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
  {
    std::vector<Vertex> queue(n);
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t s = 0; s < count; ++s) {
      bfs_row(g, static_cast<Vertex>(s), table.row(static_cast<Vertex>(s)), queue);
    }
  }
  return table;
}

DistanceTable all_pairs_distances_serial(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DistanceTable table(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) bfs_row(g, s, table.row(s), queue);
  return table;
}

}  // namespace drg
