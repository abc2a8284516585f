#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "drg/graph.hpp"

namespace drg::generators {

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
// Kneser graph K(5,2): 2-subsets of {0..4} in lexicographic order, adjacent
// when disjoint.
Graph petersen();
Graph hypercube(std::size_t dim);
// K_{n,n}.
Graph complete_bipartite(std::size_t n);
// C_3 x K_2: triangles {0,1,2} and {3,4,5} joined by rungs i -- i+3.
Graph triangular_prism();

/// Resolves "complete:n", "cycle:n", "petersen", "hypercube:d",
/// "complete_bipartite:n". Returns nullopt when `name` is not a builtin;
/// throws InvalidArgument for a builtin with a bad parameter.
std::optional<Graph> builtin(std::string_view name);

/// Builtin name or path to an edge-list file.
Graph load_source(const std::string& source);

}  // namespace drg::generators
