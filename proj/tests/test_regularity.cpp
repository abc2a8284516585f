#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "corpus.hpp"
#include "drg/error.hpp"
#include "drg/generators.hpp"
#include "drg/regularity.hpp"
#include "oracle.hpp"

using namespace drg;

namespace {

IntersectionSequence certify_ok(const Graph& g) {
  auto cert = certify_distance_regular(g);
  if (auto* w = std::get_if<NonRegularityWitness>(&cert)) {
    ADD_FAILURE() << "unexpected witness at distance " << w->distance;
    return {};
  }
  return std::get<IntersectionSequence>(cert);
}

IntersectionSequence seq(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  return IntersectionSequence::from_arrays(std::move(a), std::move(b));
}

// Tree sequence truncated at diameter d; the top boundary value is n - 1.
IntersectionSequence tree_prefix(std::uint64_t n, std::size_t d) {
  std::vector<std::uint64_t> a(d, 1), b(d, n - 1);
  b[0] = n;
  return seq(a, b);
}

std::size_t dense_distance(const std::vector<oracle::IntMatrix>& shells, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < shells.size(); ++k)
    if (shells[k](i, j) == 1) return k;
  return shells.size();
}

}  // namespace

TEST(Certify, CompleteGraphs) {
  for (std::uint64_t n = 2; n <= 12; ++n) {
    const auto is = certify_ok(generators::complete(n));
    EXPECT_EQ(is.a, (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(is.b, (std::vector<std::uint64_t>{n - 1}));
    EXPECT_EQ(is.degree, n - 1);
  }
}

TEST(Certify, PetersenMatchesBruteForceCounts) {
  const auto g = generators::petersen();
  // Oracle: neighbour-intersection counts over every ordered pair, grouped by
  // distance class, from the dense distance matrices.
  const auto shells = oracle::dense_distance_matrices(g);
  std::map<std::size_t, std::set<std::pair<std::size_t, std::size_t>>> classes;
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      const auto k = dense_distance(shells, i, j);
      std::size_t toward = 0, away = 0;
      for (std::size_t l = 0; l < 10; ++l) {
        if (shells[1](j, l) != 1) continue;
        const auto dl = dense_distance(shells, i, l);
        toward += dl + 1 == k;
        away += dl == k + 1;
      }
      classes[k].insert({toward, away});
    }
  ASSERT_EQ(classes.size(), 3u);
  for (const auto& [k, counts] : classes) EXPECT_EQ(counts.size(), 1u) << "distance " << k;
  const auto [c1, b2] = *classes[1].begin();
  const auto [c2, b3] = *classes[2].begin();
  const auto b1 = classes[0].begin()->second;

  const auto is = certify_ok(g);
  EXPECT_EQ(is.a, (std::vector<std::uint64_t>{c1, c2}));
  EXPECT_EQ(is.b, (std::vector<std::uint64_t>{b1, b2}));
  EXPECT_EQ(b3, 0u);
  EXPECT_EQ(is.a, (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(is.b, (std::vector<std::uint64_t>{3, 2}));
}

TEST(Certify, PrismWitness) {
  const auto g = generators::triangular_prism();
  const auto cert = certify_distance_regular(g);
  ASSERT_TRUE(std::holds_alternative<NonRegularityWitness>(cert));
  const auto& w = std::get<NonRegularityWitness>(cert);
  EXPECT_EQ(w.kind, WitnessKind::NotDistanceRegular);
  EXPECT_EQ(w.count, CountKind::B);
  EXPECT_EQ(w.distance, 1u);
  // Triangle edge (0,1) sees one farther neighbour, rung (0,3) sees two.
  EXPECT_EQ(w.first, (VertexPair{0, 1}));
  EXPECT_EQ(w.second, (VertexPair{0, 3}));
  EXPECT_EQ(w.first_count, 1u);
  EXPECT_EQ(w.second_count, 2u);
  EXPECT_TRUE(recheck_witness(g, w));

  auto forged = w;
  forged.second_count = 1;
  EXPECT_FALSE(recheck_witness(g, forged));
}

TEST(Certify, PathIsNotRegular) {
  const auto g = generators::path(4);
  const auto cert = certify_distance_regular(g);
  ASSERT_TRUE(std::holds_alternative<NonRegularityWitness>(cert));
  const auto& w = std::get<NonRegularityWitness>(cert);
  EXPECT_EQ(w.kind, WitnessKind::NotRegular);
  EXPECT_EQ(w.distance, 0u);
  EXPECT_TRUE(recheck_witness(g, w));
}

TEST(Certify, RoundTripsThroughRecurrence) {
  for (const auto& [name, g] : corpus::drg_corpus()) {
    SCOPED_TRACE(name);
    const auto is = certify_ok(g);
    EXPECT_TRUE(verify_recurrence(g, is).holds);
  }
}

TEST(IntersectionSequence, Validation) {
  EXPECT_THROW(seq({}, {}), Error);
  EXPECT_THROW(seq({2}, {3}), Error);           // a_1 != 1
  EXPECT_THROW(seq({1, 1}, {3, 3}), Error);     // alpha_1 < 0
  EXPECT_THROW(seq({1, 4}, {3, 2}), Error);     // tau* < 0
  try {
    seq({1, 2}, {3, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonIntegralDegree);
  }
  const auto pet = seq({1, 1}, {3, 2});
  EXPECT_EQ(pet.alpha(0), 0);
  EXPECT_EQ(pet.alpha(1), 0);
  EXPECT_EQ(pet.alpha(2), 2);
  EXPECT_EQ(pet.tau_star(), 2);
}

TEST(DegreeSequence, ClosedForms) {
  for (std::uint64_t n = 2; n <= 6; ++n) {
    const auto deg = degree_sequence(tree_prefix(n, 6));
    EXPECT_EQ(deg[0], 1u);
    std::uint64_t expected = n;
    for (std::size_t k = 1; k <= 6; ++k) {
      EXPECT_EQ(deg[k], expected);
      expected *= n - 1;
    }
  }
  EXPECT_EQ(degree_sequence(seq({1, 1}, {3, 2})), (std::vector<std::uint64_t>{1, 3, 6}));
  IntersectionSequence broken{{1, 2}, {3, 1}, 3};
  EXPECT_THROW(degree_sequence(broken), Error);
}

TEST(IsoscycleNumbers, ClosedForms) {
  for (std::uint64_t n = 2; n <= 12; ++n) {
    const auto iso = isoscycle_numbers(seq({1}, {n - 1}));
    EXPECT_EQ(iso[1], (n - 2) * (n - 1) / 2);
  }
  // Tree prefixes have alpha_k = 0 below the truncation boundary.
  const auto tree = isoscycle_numbers(tree_prefix(4, 5));
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(tree[k], 0u);
  EXPECT_EQ(isoscycle_numbers(seq({1, 1}, {3, 2})), (std::vector<std::uint64_t>{0, 0, 6}));

  // alpha_1 = 1, deg(A_1) = 3: half of 3 is not an integer.
  IntersectionSequence odd{{1, 1}, {3, 1}, 3};
  try {
    isoscycle_numbers(odd);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonIntegralCount);
  }
}

TEST(VerifyRecurrence, PetersenCompleteAndTampered) {
  const auto pet = generators::petersen();
  EXPECT_TRUE(verify_recurrence(pet, seq({1, 1}, {3, 2})).holds);
  EXPECT_TRUE(verify_recurrence(generators::complete(4), seq({1}, {3})).holds);

  const IntersectionSequence tampered{{1, 1}, {3, 3}, 3};
  const auto check = verify_recurrence(pet, tampered);
  EXPECT_FALSE(check.holds);
  ASSERT_TRUE(check.mismatch.has_value());
  EXPECT_NE(check.mismatch->expected, check.mismatch->actual);
}

TEST(VerifyRecurrence, CompleteGraphReducesToSquare) {
  // A^2 = 3I + 2A on K_4, checked directly.
  const auto adj = oracle::dense_adjacency(generators::complete(4));
  const auto sq = oracle::multiply(adj, adj);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(sq(i, j), i == j ? 3 : 2);
}

TEST(DistancePoly, BaseCasesAndDegreeIdentity) {
  const auto pet = seq({1, 1}, {3, 2});
  EXPECT_DOUBLE_EQ(distance_poly_eval(pet, 0, 0.37), 1.0);
  EXPECT_DOUBLE_EQ(distance_poly_eval(pet, 1, 0.37), 0.37);
  EXPECT_DOUBLE_EQ(distance_poly_eval(pet, 2, 3.0), 6.0);
  for (const auto& [name, g] : corpus::drg_corpus()) {
    SCOPED_TRACE(name);
    const auto is = certify_ok(g);
    const auto deg = degree_sequence(is);
    for (std::size_t k = 0; k <= is.diameter(); ++k) {
      EXPECT_EQ(distance_poly_eval_exact(is, k, Rational(is.degree)), Rational(deg[k]));
      EXPECT_EQ(distance_poly_eval(is, k, static_cast<double>(is.degree)), static_cast<double>(deg[k]));
    }
  }
  EXPECT_THROW(distance_poly_eval(pet, 3, 1.0), Error);
}

TEST(DistancePoly, EvaluatesToDistanceMatrices) {
  // p_k(A) = A_k on Petersen, with p_2(x) = x^2 - 3.
  const auto pet = seq({1, 1}, {3, 2});
  for (double x : {-2.0, 0.5, 1.0, 3.0}) EXPECT_NEAR(distance_poly_eval(pet, 2, x), x * x - 3.0, 1e-12);
}

TEST(CorpusCounts, MatchClosedForms) {
  for (const auto& [name, g] : corpus::drg_corpus()) {
    SCOPED_TRACE(name);
    const auto is = certify_ok(g);
    const auto deg = degree_sequence(is);
    const auto iso = isoscycle_numbers(is);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      for (std::size_t k = 0; k <= is.diameter(); ++k) {
        EXPECT_EQ(degree_k(g, v, k), deg[k]);
        EXPECT_EQ(isoscycle_count(g, v, k), iso[k]);
      }
  }
}

// Flipping any single vertex pair breaks regularity; the witness recounts.
TEST(Certify, PerturbationSoundness) {
  for (const auto& [name, g] : corpus::drg_corpus()) {
    SCOPED_TRACE(name);
    const std::size_t n = g.vertex_count();
    const auto base = g.edges();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        auto edges = base;
        const auto it = std::find(edges.begin(), edges.end(), std::pair<Vertex, Vertex>{u, v});
        if (it != edges.end()) edges.erase(it);
        else edges.emplace_back(u, v);
        std::optional<Graph> flipped;
        try {
          flipped = Graph::from_edges(n, edges);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::NotConnected);
          continue;
        }
        const auto cert = certify_distance_regular(*flipped);
        ASSERT_TRUE(std::holds_alternative<NonRegularityWitness>(cert)) << u << "-" << v;
        EXPECT_TRUE(recheck_witness(*flipped, std::get<NonRegularityWitness>(cert)));
      }
  }
}
