#include "drg/generators.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "drg/error.hpp"

namespace drg::generators {
namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

std::size_t parse_parameter(std::string_view name, std::string_view value) {
  std::size_t out = 0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (value.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::InvalidArgument,
                "bad parameter in graph name '" + std::string(name) + "'");
  }
  return out;
}

}  // namespace

Graph complete(std::size_t n) {
  EdgeList e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "cycle needs n >= 3", n);
  EdgeList e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph path(std::size_t n) {
  EdgeList e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph petersen() {
  std::vector<std::pair<int, int>> subsets;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
  EdgeList e;
  for (Vertex u = 0; u < subsets.size(); ++u) {
    for (Vertex v = u + 1; v < subsets.size(); ++v) {
      const auto [a, b] = subsets[u];
      const auto [c, d] = subsets[v];
      if (a != c && a != d && b != c && b != d) e.emplace_back(u, v);
    }
  }
  return Graph::from_edges(subsets.size(), e);
}

Graph hypercube(std::size_t dim) {
  if (dim < 1 || dim > 20) throw Error(ErrorCode::InvalidArgument, "hypercube dimension must be 1..20", dim);
  const std::size_t n = std::size_t{1} << dim;
  EdgeList e;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t bit = 0; bit < dim; ++bit) {
      const Vertex w = v ^ (std::size_t{1} << bit);
      if (v < w) e.emplace_back(v, w);
    }
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(std::size_t n) {
  EdgeList e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) e.emplace_back(i, n + j);
  return Graph::from_edges(2 * n, e);
}

Graph triangular_prism() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

std::optional<Graph> builtin(std::string_view name) {
  if (name == "petersen") return petersen();
  const auto colon = name.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto kind = name.substr(0, colon);
  const auto arg = name.substr(colon + 1);
  if (kind == "complete") return complete(parse_parameter(name, arg));
  if (kind == "cycle") return cycle(parse_parameter(name, arg));
  if (kind == "hypercube") return hypercube(parse_parameter(name, arg));
  if (kind == "complete_bipartite") return complete_bipartite(parse_parameter(name, arg));
  return std::nullopt;
}

Graph load_source(const std::string& source) {
  if (auto g = builtin(source)) return std::move(*g);
  std::ifstream in(source);
  if (!in) {
    throw Error(ErrorCode::InvalidArgument,
                "'" + source + "' is neither a builtin graph nor a readable file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

}  // namespace drg::generators
