#include "drg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <string>

#include "drg/distance_table.hpp"
#include "drg/error.hpp"

namespace drg {
namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_index(std::string_view token, Vertex& out) {
  if (token.empty()) return false;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Graph Graph::from_edges(std::size_t vertex_count,
                        const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (vertex_count < 2) {
    throw Error(ErrorCode::TooSmall, "graph needs at least two vertices", vertex_count);
  }
  std::vector<std::vector<Vertex>> adj(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorCode::InvalidVertex,
                  "edge endpoint out of range: " + std::to_string(std::max(u, v)),
                  std::max(u, v));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(u), u);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::size_t half_edges = 0;
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    half_edges += row.size();
  }

  // Connectivity from vertex 0.
  std::vector<bool> seen(vertex_count, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertex_count) {
    const auto witness = static_cast<Vertex>(
        std::find(seen.begin(), seen.end(), false) - seen.begin());
    throw Error(ErrorCode::NotConnected,
                "vertex " + std::to_string(witness) + " is not reachable from vertex 0",
                witness);
  }
  return Graph(std::move(adj), half_edges / 2);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = adjacency_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex w : adjacency_[u]) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

bool DistanceKMatrix::entry(Vertex i, Vertex j) const {
  const auto& row = rows.at(i);
  return std::binary_search(row.begin(), row.end(), j);
}

bool DistanceKMatrix::is_zero() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.empty(); });
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex max_index = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;

    const auto gap = line.find_first_of(" \t");
    Vertex u = 0, v = 0;
    if (gap == std::string_view::npos || !parse_index(line.substr(0, gap), u) ||
        !parse_index(trim(line.substr(gap)), v)) {
      throw Error(ErrorCode::MalformedLine,
                  "line " + std::to_string(line_no) + ": expected \"u v\"", line_no);
    }
    if (u == v) {
      throw Error(ErrorCode::SelfLoop,
                  "line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u), u);
    }
    max_index = std::max({max_index, u, v});
    edges.emplace_back(u, v);
  }
  const std::size_t n = edges.empty() ? 0 : max_index + 1;
  return Graph::from_edges(n, edges);
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  const std::size_t n = g.vertex_count();
  if (source >= n) {
    throw Error(ErrorCode::InvalidVertex, "source out of range", source);
  }
  std::vector<std::size_t> dist(n, kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceKMatrix distance_k_matrix(const Graph& g, std::size_t k) {
  const auto table = all_pairs_distances(g);
  const std::size_t n = g.vertex_count();
  DistanceKMatrix m{k, std::vector<std::vector<Vertex>>(n)};
  for (Vertex i = 0; i < n; ++i) {
    const auto* row = table.row(i);
    for (Vertex j = 0; j < n; ++j) {
      if (row[j] == k) m.rows[i].push_back(j);
    }
  }
  return m;
}

std::size_t degree_k(const Graph& g, Vertex v, std::size_t k) {
  const auto dist = bfs_distances(g, v);
  return static_cast<std::size_t>(std::count(dist.begin(), dist.end(), k));
}

std::size_t isoscycle_count(const Graph& g, Vertex v, std::size_t k) {
  const auto dist = bfs_distances(g, v);
  std::size_t ordered = 0;
  for (Vertex u = 0; u < dist.size(); ++u) {
    if (dist[u] != k) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == k) ++ordered;
    }
  }
  if (ordered % 2 != 0) {
    throw Error(ErrorCode::OddPairCount, "odd ordered-pair count in distance shell", k);
  }
  return ordered / 2;
}

std::size_t eccentricity(const Graph& g, Vertex v) {
  const auto dist = bfs_distances(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

std::size_t diameter(const Graph& g) { return all_pairs_distances(g).diameter(); }

}  // namespace drg
