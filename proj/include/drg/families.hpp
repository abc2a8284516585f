#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drg/jacobi.hpp"

namespace drg {

/// Lazily evaluated intersection sequence of an infinite-diameter family.
/// Every term is validated when generated: a_1 = 1, b_1 = degree, a_k, b_k >= 1
/// and alpha_k = degree - (a_k + b_{k+1}) >= 0.
class FamilyGenerator {
 public:
  struct Term {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
  };

  FamilyGenerator(std::uint64_t degree, std::string description,
                  std::function<Term(std::size_t)> terms);

  Term term(std::size_t k) const;  // k >= 1
  std::int64_t alpha(std::size_t k) const;
  std::uint64_t offdiag_squared(std::size_t k) const;

  std::uint64_t degree() const noexcept { return degree_; }
  const std::string& description() const noexcept { return description_; }

 private:
  std::uint64_t degree_;
  std::string description_;
  std::function<Term(std::size_t)> terms_;
};

/// n-regular tree: (1, n), (1, n-1), (1, n-1), ...
FamilyGenerator tree_sequence(std::uint64_t n);

/// Explicit prefix whose last `period` pairs repeat forever.
FamilyGenerator periodic_sequence(std::vector<FamilyGenerator::Term> pairs, std::size_t period);

/// "tree:n" or "custom:a1,b1;a2,b2;...;period=p".
FamilyGenerator parse_family(std::string_view spec);

/// Top-left m x m corner of the infinite Jacobi matrix (no tau boundary).
JacobiOperator truncated_jacobi(const FamilyGenerator& gen, std::size_t m);

/// (J^k)_{0,0} = <v, A^k v>, counted exactly as weighted closed walks on the
/// path 0..ceil(k/2): stays weigh alpha_j, an up-down excursion to level j
/// weighs a_j b_j. Throws Overflow past 64 bits.
std::uint64_t moment(const FamilyGenerator& gen, std::size_t k);

/// Same count restricted to a truncation with `size` levels.
std::uint64_t moment_truncated(const FamilyGenerator& gen, std::size_t k, std::size_t size);

/// Kesten-McKay density n sqrt(4(n-1) - x^2) / (2 pi (n^2 - x^2)) on
/// |x| <= 2 sqrt(n-1), zero outside.
double kesten_mckay_density(std::uint64_t n, double x);

/// Integral of x^k against the Kesten-McKay density after x = R sin(theta).
/// Converged when the error estimate is <= quad_tol * max(1, integral of |f|).
double density_moment(std::uint64_t n, std::size_t k, double quad_tol = 1e-8);

/// 2 sqrt(n-1).
double spectral_radius_tree(std::uint64_t n);

/// max |lambda| over the eigenvalues of truncated_jacobi(gen, m).
double truncated_spectral_radius(const FamilyGenerator& gen, std::size_t m);

}  // namespace drg
