#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "drg/regularity.hpp"

namespace drg {

/// Symmetric tridiagonal operator. For an extension J_tau built from an
/// intersection sequence, diag = [0, alpha_1, ..., alpha_{d-1}, tau] and
/// offdiag[k-1] = sqrt(a_k b_k). Corner truncations of infinite families have
/// no tau.
struct JacobiOperator {
  std::vector<double> diag;
  std::vector<double> offdiag;  // size() - 1 entries, all > 0
  std::optional<double> tau;

  std::size_t size() const noexcept { return diag.size(); }
};

struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;
};

JacobiOperator build_jacobi(const IntersectionSequence& is, double tau);

/// deg(A) - a_d: the extension whose spectrum is the adjacency spectrum.
double canonical_tau(const IntersectionSequence& is);

/// P_0(x), ..., P_n(x) followed by P^{(tau)}_{n+1}(x).
struct FirstKindEvaluation {
  double point = 0.0;
  double tau = 0.0;
  std::vector<double> values;

  double last() const { return values.back(); }
};

FirstKindEvaluation eval_first_kind(const IntersectionSequence& is, double tau, double x);

// The same recurrence on an arbitrary operator: P_0 .. P_{m-1} normalised,
// the final entry is the monic-scaled characteristic term.
std::vector<double> first_kind_values(const JacobiOperator& J, double x);
// Values and x-derivatives, both of length size() + 1.
void first_kind_with_derivative(const JacobiOperator& J, double x,
                                std::vector<double>& values,
                                std::vector<double>& derivatives);

/// Number of eigenvalues <= x, from the sign changes of the first-kind
/// sequence (rescaled to stay finite).
std::size_t sturm_count(const JacobiOperator& J, double x);

Enclosure gershgorin(const JacobiOperator& J);

/// 1e-12 * max(1, Gershgorin radius).
double default_tolerance(const JacobiOperator& J);

/// All eigenvalues in increasing order, each bracketed to width < tol by
/// Sturm bisection. Indices are bisected in parallel.
std::vector<double> eigenvalues(const JacobiOperator& J, double tol);
std::vector<double> eigenvalues(const JacobiOperator& J);

/// Single-threaded reference for eigenvalues().
std::vector<double> eigenvalues_serial(const JacobiOperator& J, double tol);

/// (P_0(lambda), ..., P_n(lambda)); NotAnEigenvalue when the boundary term
/// |P^{(tau)}_{n+1}(lambda)| exceeds rel_tol * |phi| * max(1, |J|).
std::vector<double> eigenfunction_coeffs(const IntersectionSequence& is, double tau,
                                         double lambda, double rel_tol = 1e-8);

/// 1 / sum P_k^2 and 1 / (P_n (P^{(tau)}_{n+1})') at lambda.
struct WeightFormulas {
  double direct = 0.0;
  double kernel = 0.0;
};

WeightFormulas weight_formulas(const IntersectionSequence& is, double tau, double lambda);

/// ||phi_lambda||^{-2}; throws WeightMismatch when the two formulas differ by
/// more than rel_tol relative.
double atom_weight(const IntersectionSequence& is, double tau, double lambda,
                   double rel_tol = 1e-9);

struct SpectralAtom {
  double lambda = 0.0;
  double weight = 0.0;
  std::optional<std::size_t> multiplicity;
};

struct SpectralMeasure {
  double tau = 0.0;
  std::vector<SpectralAtom> atoms;

  double total_weight() const;
};

/// Atoms at the eigenvalues of J_{tau*}. With a vertex count N, multiplicities
/// round(N w) are attached after checking |N w - m| < 1e-6 N and sum m = N.
SpectralMeasure spectral_measure(const IntersectionSequence& is,
                                 std::optional<std::size_t> vertex_count = std::nullopt);

/// Spectra of J_tau1 and J_tau2 are disjoint (gaps > tol) and alternate.
/// tau1 == tau2 is a precondition violation (InvalidArgument).
bool check_interlacing(const IntersectionSequence& is, double tau1, double tau2, double tol);

/// Christoffel-Darboux kernel K_k(x, y) = sum_{j<=k} P_j(x) P_j(y) for
/// 0 <= k <= d-1, cross-checked against the closed form (or its confluent
/// limit when x == y). Throws KernelMismatch.
double cd_kernel(const IntersectionSequence& is, std::size_t k, double x, double y);

}  // namespace drg
