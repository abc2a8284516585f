#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "drg/graph.hpp"

namespace drg {

using Rational = boost::multiprecision::cpp_rational;

/// Intersection pairs (a_k, b_k), k = 1..d, in the convention where a_k counts
/// neighbours one step closer and b_{k+1} neighbours one step farther for a
/// vertex pair at distance k.
///
/// The struct is a plain aggregate so deliberately inconsistent sequences can
/// be built (e.g. to exercise verify_recurrence). from_arrays() validates.
struct IntersectionSequence {
  std::vector<std::uint64_t> a;  // a[k-1] = a_k
  std::vector<std::uint64_t> b;  // b[k-1] = b_k
  std::uint64_t degree = 0;      // = b_1

  /// Validates: d >= 1, a_1 = 1, b_1 = degree, all entries >= 1,
  /// alpha_k >= 0 for 1 <= k <= d-1, tau* >= 0, integral deg(A_k).
  static IntersectionSequence from_arrays(std::vector<std::uint64_t> a,
                                          std::vector<std::uint64_t> b);

  std::size_t diameter() const noexcept { return a.size(); }
  std::uint64_t a_at(std::size_t k) const { return a.at(k - 1); }
  std::uint64_t b_at(std::size_t k) const { return b.at(k - 1); }

  // alpha_0 = 0; alpha_k = degree - (a_k + b_{k+1}) for 1 <= k < d;
  // alpha_d = tau* = degree - a_d.
  std::int64_t alpha(std::size_t k) const;
  std::int64_t tau_star() const;

  // Squared off-diagonal a_k * b_k, k = 1..d.
  std::uint64_t offdiag_squared(std::size_t k) const;

  friend bool operator==(const IntersectionSequence&, const IntersectionSequence&) = default;
};

enum class WitnessKind { NotRegular, NotDistanceRegular };

// Which neighbour count diverged: a-type (towards the base vertex) or b-type
// (away from it). Degree disagreements are b-type counts at distance 0.
enum class CountKind { A, B };

struct VertexPair {
  Vertex i = 0;
  Vertex j = 0;
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

/// Two pairs at the same distance whose neighbour-intersection counts differ.
/// For a pair (i, j) at distance k the a-count is |N(j) ∩ Γ_{k-1}(i)| and the
/// b-count is |N(j) ∩ Γ_{k+1}(i)|.
struct NonRegularityWitness {
  WitnessKind kind = WitnessKind::NotRegular;
  CountKind count = CountKind::B;
  std::size_t distance = 0;
  VertexPair first;
  VertexPair second;
  std::size_t first_count = 0;
  std::size_t second_count = 0;
};

using Certificate = std::variant<IntersectionSequence, NonRegularityWitness>;

Certificate certify_distance_regular(const Graph& g);

/// Recounts both pairs of the witness on `g`.
bool recheck_witness(const Graph& g, const NonRegularityWitness& w);

/// deg(A_k) for k = 0..d. Throws NonIntegralDegree or Overflow.
std::vector<std::uint64_t> degree_sequence(const IntersectionSequence& is);

/// isosc(A_k) = (alpha_k / 2) deg(A_k) for k = 0..d, using tau* at k = d.
std::vector<std::uint64_t> isoscycle_numbers(const IntersectionSequence& is);

struct RecurrenceMismatch {
  std::size_t k = 0;
  Vertex i = 0;
  Vertex j = 0;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
};

struct RecurrenceCheck {
  bool holds = true;
  std::optional<RecurrenceMismatch> mismatch;  // first failing entry
};

/// Checks A A_k = a_{k+1} A_{k+1} + alpha_k A_k + b_k A_{k-1} entrywise in
/// integers for k = 0..d (A_{-1} = A_{d+1} = 0, alpha_d = tau*).
RecurrenceCheck verify_recurrence(const Graph& g, const IntersectionSequence& is);

/// p_k(x) where p_k(A) = A_k, from
/// p_{k+1} = ((x - alpha_k) p_k - b_k p_{k-1}) / a_{k+1}.
double distance_poly_eval(const IntersectionSequence& is, std::size_t k, double x);
Rational distance_poly_eval_exact(const IntersectionSequence& is, std::size_t k,
                                  const Rational& x);

}  // namespace drg
