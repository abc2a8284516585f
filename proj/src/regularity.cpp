#include "drg/regularity.hpp"

#include <string>

#include "drg/distance_table.hpp"
#include "drg/error.hpp"

namespace drg {
namespace {

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw Error(ErrorCode::Overflow, "64-bit overflow in intersection arithmetic");
  }
  return out;
}

struct PairCounts {
  std::size_t toward = 0;
  std::size_t away = 0;
};

PairCounts count_pair(const Graph& g, const DistanceTable& dist, Vertex i, Vertex j) {
  const auto k = dist.at(i, j);
  PairCounts c;
  for (Vertex l : g.neighbors(j)) {
    const auto dl = dist.at(i, l);
    if (dl + 1 == k) ++c.toward;
    else if (dl == k + 1) ++c.away;
  }
  return c;
}

std::int64_t as_signed(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) {
    throw Error(ErrorCode::Overflow, "intersection value exceeds int64");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

IntersectionSequence IntersectionSequence::from_arrays(std::vector<std::uint64_t> a,
                                                       std::vector<std::uint64_t> b) {
  if (a.empty() || a.size() != b.size()) {
    throw Error(ErrorCode::InvalidSequence, "need d >= 1 pairs with matching lengths");
  }
  IntersectionSequence is{std::move(a), std::move(b), 0};
  is.degree = is.b.front();
  if (is.a.front() != 1) throw Error(ErrorCode::InvalidSequence, "a_1 must equal 1", 1);
  for (std::size_t k = 1; k <= is.diameter(); ++k) {
    if (is.a_at(k) == 0 || is.b_at(k) == 0) {
      throw Error(ErrorCode::InvalidSequence, "a_k and b_k must be positive", k);
    }
  }
  for (std::size_t k = 1; k <= is.diameter(); ++k) {
    if (is.alpha(k) < 0) {
      throw Error(ErrorCode::InvalidSequence, "alpha_" + std::to_string(k) + " is negative", k);
    }
  }
  degree_sequence(is);
  return is;
}

std::int64_t IntersectionSequence::alpha(std::size_t k) const {
  const std::size_t d = diameter();
  if (k == 0) return 0;
  if (k == d) return tau_star();
  if (k > d) throw Error(ErrorCode::InvalidArgument, "alpha index beyond diameter", k);
  return as_signed(degree) - (as_signed(a_at(k)) + as_signed(b_at(k + 1)));
}

std::int64_t IntersectionSequence::tau_star() const {
  return as_signed(degree) - as_signed(a.back());
}

std::uint64_t IntersectionSequence::offdiag_squared(std::size_t k) const {
  return checked_mul(a_at(k), b_at(k));
}

Certificate certify_distance_regular(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw Error(ErrorCode::TooSmall, "graph needs at least two vertices", n);

  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) != g.degree(0)) {
      return NonRegularityWitness{WitnessKind::NotRegular, CountKind::B, 0,
                                  {0, 0}, {v, v}, g.degree(0), g.degree(v)};
    }
  }

  const auto dist = all_pairs_distances(g);
  const std::size_t d = dist.diameter();
  struct Seen {
    bool set = false;
    VertexPair pair;
    PairCounts counts;
  };
  std::vector<Seen> seen(d + 1);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      const auto k = dist.at(i, j);
      const auto c = count_pair(g, dist, i, j);
      auto& s = seen[k];
      if (!s.set) {
        s = {true, {i, j}, c};
        continue;
      }
      if (c.toward != s.counts.toward) {
        return NonRegularityWitness{WitnessKind::NotDistanceRegular, CountKind::A, k,
                                    s.pair, {i, j}, s.counts.toward, c.toward};
      }
      if (c.away != s.counts.away) {
        return NonRegularityWitness{WitnessKind::NotDistanceRegular, CountKind::B, k,
                                    s.pair, {i, j}, s.counts.away, c.away};
      }
    }
  }

  std::vector<std::uint64_t> a(d), b(d);
  for (std::size_t k = 1; k <= d; ++k) {
    a[k - 1] = seen[k].counts.toward;
    b[k - 1] = seen[k - 1].counts.away;
  }
  return IntersectionSequence::from_arrays(std::move(a), std::move(b));
}

bool recheck_witness(const Graph& g, const NonRegularityWitness& w) {
  const auto dist = all_pairs_distances(g);
  auto pick = [&](const VertexPair& p) {
    const auto c = count_pair(g, dist, p.i, p.j);
    return w.count == CountKind::A ? c.toward : c.away;
  };
  return dist.at(w.first.i, w.first.j) == w.distance &&
         dist.at(w.second.i, w.second.j) == w.distance &&
         pick(w.first) == w.first_count && pick(w.second) == w.second_count &&
         w.first_count != w.second_count;
}

std::vector<std::uint64_t> degree_sequence(const IntersectionSequence& is) {
  std::vector<std::uint64_t> deg{1};
  for (std::size_t k = 1; k <= is.diameter(); ++k) {
    const auto num = checked_mul(deg.back(), is.b_at(k));
    if (num % is.a_at(k) != 0) {
      throw Error(ErrorCode::NonIntegralDegree,
                  "deg(A_" + std::to_string(k) + ") is not an integer", k);
    }
    deg.push_back(num / is.a_at(k));
  }
  return deg;
}

std::vector<std::uint64_t> isoscycle_numbers(const IntersectionSequence& is) {
  const auto deg = degree_sequence(is);
  std::vector<std::uint64_t> out(deg.size());
  for (std::size_t k = 0; k < deg.size(); ++k) {
    const auto alpha = is.alpha(k);
    if (alpha < 0) {
      throw Error(ErrorCode::InvalidSequence, "negative alpha_" + std::to_string(k), k);
    }
    const auto twice = checked_mul(static_cast<std::uint64_t>(alpha), deg[k]);
    if (twice % 2 != 0) {
      throw Error(ErrorCode::NonIntegralCount,
                  "isosc(A_" + std::to_string(k) + ") is not an integer", k);
    }
    out[k] = twice / 2;
  }
  return out;
}

RecurrenceCheck verify_recurrence(const Graph& g, const IntersectionSequence& is) {
  const auto dist = all_pairs_distances(g);
  const std::size_t n = g.vertex_count();
  const std::size_t d = is.diameter();
  for (std::size_t k = 0; k <= d; ++k) {
    const std::int64_t up = k < d ? as_signed(is.a_at(k + 1)) : 0;
    const std::int64_t stay = is.alpha(k);
    const std::int64_t down = k > 0 ? as_signed(is.b_at(k)) : 0;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = 0; j < n; ++j) {
        // (A A_k)_{ij} = #{l ~ i : dist(l, j) = k}
        std::int64_t actual = 0;
        for (Vertex l : g.neighbors(i)) actual += dist.at(l, j) == k;
        const auto r = static_cast<std::size_t>(dist.at(i, j));
        std::int64_t expected = 0;
        if (r == k + 1) expected = up;
        else if (r == k) expected = stay;
        else if (k > 0 && r + 1 == k) expected = down;
        if (actual != expected) {
          return {false, RecurrenceMismatch{k, i, j, expected, actual}};
        }
      }
    }
  }
  return {};
}

double distance_poly_eval(const IntersectionSequence& is, std::size_t k, double x) {
  if (k > is.diameter()) throw Error(ErrorCode::InvalidArgument, "k beyond diameter", k);
  double prev = 0.0, cur = 1.0;
  for (std::size_t m = 0; m < k; ++m) {
    const double down = m > 0 ? static_cast<double>(is.b_at(m)) : 0.0;
    const double next =
        ((x - static_cast<double>(is.alpha(m))) * cur - down * prev) / static_cast<double>(is.a_at(m + 1));
    prev = cur;
    cur = next;
  }
  return cur;
}

Rational distance_poly_eval_exact(const IntersectionSequence& is, std::size_t k,
                                  const Rational& x) {
  if (k > is.diameter()) throw Error(ErrorCode::InvalidArgument, "k beyond diameter", k);
  Rational prev = 0, cur = 1;
  for (std::size_t m = 0; m < k; ++m) {
    const Rational down = m > 0 ? Rational(is.b_at(m)) : Rational(0);
    Rational next = ((x - Rational(is.alpha(m))) * cur - down * prev) / Rational(is.a_at(m + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace drg
