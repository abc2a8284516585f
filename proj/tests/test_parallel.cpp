#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "drg/distance_table.hpp"
#include "drg/families.hpp"
#include "drg/jacobi.hpp"

using namespace drg;

namespace {

Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(rng() % v, v);  // spanning tree
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST(Parallel, DistancesOnCorpus) {
  for (const auto& [name, g] : corpus::drg_corpus()) {
    SCOPED_TRACE(name);
    EXPECT_EQ(all_pairs_distances(g), all_pairs_distances_serial(g));
  }
  const auto q8 = generators::hypercube(8);
  EXPECT_EQ(all_pairs_distances(q8), all_pairs_distances_serial(q8));
}

TEST(Parallel, DistancesOnRandomGraphs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_connected(5 + rng() % 60, 0.05, rng);
    EXPECT_EQ(all_pairs_distances(g), all_pairs_distances_serial(g));
  }
}

// Same bisection steps in both versions, so results are bit-identical.
TEST(Parallel, EigenvaluesOnCorpus) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> tau(-5.0, 5.0);
  for (const auto& [name, g] : corpus::drg_corpus()) {
    SCOPED_TRACE(name);
    const auto is = std::get<IntersectionSequence>(certify_distance_regular(g));
    for (double t : {canonical_tau(is), tau(rng)}) {
      const auto J = build_jacobi(is, t);
      EXPECT_EQ(eigenvalues(J, default_tolerance(J)), eigenvalues_serial(J, default_tolerance(J)));
    }
  }
}

TEST(Parallel, EigenvaluesOnTruncations) {
  for (std::uint64_t n = 2; n <= 5; ++n) {
    const auto J = truncated_jacobi(tree_sequence(n), 150);
    EXPECT_EQ(eigenvalues(J, default_tolerance(J)), eigenvalues_serial(J, default_tolerance(J)));
  }
}
