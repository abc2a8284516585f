#pragma once

// Brute-force dense references for the test suites and `drgspec verify`.
// Nothing here calls into the Jacobi or Sturm code, so agreement between the
// two is evidence rather than a tautology.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "drg/graph.hpp"
#include "drg/regularity.hpp"

namespace drg::oracle {

inline constexpr std::size_t kMaxDenseVertices = 2000;

template <typename T>
struct Matrix {
  std::size_t n = 0;
  std::vector<T> data;

  Matrix() = default;
  explicit Matrix(std::size_t size, T fill = T{}) : n(size), data(size * size, fill) {}

  static Matrix identity(std::size_t size) {
    Matrix m(size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = T{1};
    return m;
  }

  T& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

using IntMatrix = Matrix<std::int64_t>;
using DenseMatrix = Matrix<double>;

IntMatrix dense_adjacency(const Graph& g);

/// A_0 .. A_diam from a BFS over the dense adjacency matrix.
std::vector<IntMatrix> dense_distance_matrices(const Graph& g);

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);
DenseMatrix multiply(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix to_dense(const IntMatrix& m);
double max_abs(const DenseMatrix& m);
bool is_symmetric(const DenseMatrix& m);

struct Eigensystem {
  std::vector<double> values;  // ascending, repeated by multiplicity
  DenseMatrix vectors;         // column j pairs with values[j]
  struct Cluster {
    double value = 0.0;
    std::size_t multiplicity = 0;
  };
  std::vector<Cluster> clusters;  // gap 1e-6 * max(1, |M|_max)
  double residual = 0.0;          // |M - Q diag(values) Q^T|_max
};

/// Cyclic two-sided Jacobi rotations. NoConvergence if the sweep budget runs
/// out or the reconstruction residual is not below tol.
Eigensystem dense_symmetric_eigen(const DenseMatrix& m, double tol = 1e-10);

/// A A_k == a_{k+1} A_{k+1} + alpha_k A_k + b_k A_{k-1} via dense integer
/// products, k = 0..d.
bool recurrence_holds(const Graph& g, const IntersectionSequence& is);

struct FirstKindMatrices {
  std::vector<DenseMatrix> basis;  // P_0(A) .. P_n(A)
  DenseMatrix boundary;            // P^{(tau)}_{n+1}(A)
};

/// Evaluates the first-kind recurrence at the dense adjacency matrix and
/// checks P_k(A) sqrt(deg A_k) = A_k within 1e-10 (BasisMismatch otherwise).
FirstKindMatrices first_kind_matrices(const Graph& g, const IntersectionSequence& is, double tau);

DenseMatrix matrix_poly_firstkind(const Graph& g, const IntersectionSequence& is, double tau);

/// A_k / sqrt(deg A_k) for k = 0..diam.
std::vector<DenseMatrix> normalized_distance_matrices(const Graph& g);

/// Spectral radius of a symmetric matrix by power iteration on M^2.
double operator_norm(const DenseMatrix& m, double tol = 1e-10);

}  // namespace drg::oracle
