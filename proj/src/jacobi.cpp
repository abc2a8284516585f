#include "drg/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "drg/error.hpp"

namespace drg {
namespace {

constexpr double kRescaleHigh = 1e100;
constexpr double kRescaleLow = 1e-100;

void require_nonempty(const JacobiOperator& J) {
  if (J.diag.empty() || J.offdiag.size() + 1 != J.diag.size()) {
    throw Error(ErrorCode::InvalidArgument, "malformed Jacobi operator");
  }
}

double bisect_index(const JacobiOperator& J, std::size_t index, Enclosure box, double tol) {
  double lo = box.lo, hi = box.hi;
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) {
      throw Error(ErrorCode::ToleranceTooSmall,
                  "bisection reached float resolution before width " + std::to_string(tol), index);
    }
    if (sturm_count(J, mid) > index) hi = mid;
    else lo = mid;
  }
  return lo + 0.5 * (hi - lo);
}

void check_separated(const std::vector<double>& roots, double tol) {
  for (std::size_t j = 1; j < roots.size(); ++j) {
    if (!(roots[j] - roots[j - 1] > tol)) {
      throw Error(ErrorCode::ToleranceTooSmall,
                  "eigenvalues " + std::to_string(j - 1) + " and " + std::to_string(j) +
                      " fell into one bracket",
                  j);
    }
  }
}

double operator_scale(const JacobiOperator& J) {
  const auto box = gershgorin(J);
  return std::max({1.0, std::abs(box.lo), std::abs(box.hi)});
}

}  // namespace

JacobiOperator build_jacobi(const IntersectionSequence& is, double tau) {
  const std::size_t d = is.diameter();
  if (d == 0) throw Error(ErrorCode::InvalidSequence, "diameter must be at least 1");
  JacobiOperator J;
  J.diag.resize(d + 1);
  J.offdiag.resize(d);
  for (std::size_t k = 0; k < d; ++k) J.diag[k] = static_cast<double>(is.alpha(k));
  J.diag[d] = tau;
  for (std::size_t k = 1; k <= d; ++k) {
    J.offdiag[k - 1] = std::sqrt(static_cast<double>(is.offdiag_squared(k)));
  }
  J.tau = tau;
  return J;
}

double canonical_tau(const IntersectionSequence& is) {
  return static_cast<double>(is.tau_star());
}

std::vector<double> first_kind_values(const JacobiOperator& J, double x) {
  require_nonempty(J);
  const std::size_t m = J.size();
  std::vector<double> p(m + 1);
  p[0] = 1.0;
  if (m == 1) {
    p[1] = x - J.diag[0];
    return p;
  }
  p[1] = (x - J.diag[0]) / J.offdiag[0];
  for (std::size_t k = 1; k + 1 < m; ++k) {
    p[k + 1] = ((x - J.diag[k]) * p[k] - J.offdiag[k - 1] * p[k - 1]) / J.offdiag[k];
  }
  p[m] = (x - J.diag[m - 1]) * p[m - 1] - J.offdiag[m - 2] * p[m - 2];
  return p;
}

void first_kind_with_derivative(const JacobiOperator& J, double x, std::vector<double>& p,
                                std::vector<double>& dp) {
  require_nonempty(J);
  const std::size_t m = J.size();
  p.assign(m + 1, 0.0);
  dp.assign(m + 1, 0.0);
  p[0] = 1.0;
  if (m == 1) {
    p[1] = x - J.diag[0];
    dp[1] = 1.0;
    return;
  }
  p[1] = (x - J.diag[0]) / J.offdiag[0];
  dp[1] = 1.0 / J.offdiag[0];
  for (std::size_t k = 1; k + 1 < m; ++k) {
    const double shift = x - J.diag[k];
    p[k + 1] = (shift * p[k] - J.offdiag[k - 1] * p[k - 1]) / J.offdiag[k];
    dp[k + 1] = (p[k] + shift * dp[k] - J.offdiag[k - 1] * dp[k - 1]) / J.offdiag[k];
  }
  const double shift = x - J.diag[m - 1];
  p[m] = shift * p[m - 1] - J.offdiag[m - 2] * p[m - 2];
  dp[m] = p[m - 1] + shift * dp[m - 1] - J.offdiag[m - 2] * dp[m - 2];
}

std::size_t sturm_count(const JacobiOperator& J, double x) {
  require_nonempty(J);
  const std::size_t m = J.size();
  std::size_t changes = 0;
  double prev_sign = 1.0;  // sign of the last nonzero term, P_0 = 1
  auto visit = [&](double value) {
    if (value == 0.0) return;  // a zero inherits the previous sign
    const double s = value > 0.0 ? 1.0 : -1.0;
    if (s != prev_sign) ++changes;
    prev_sign = s;
  };

  double before = 1.0;
  double current = m == 1 ? x - J.diag[0] : (x - J.diag[0]) / J.offdiag[0];
  visit(current);
  for (std::size_t k = 1; k < m; ++k) {
    const double raw = (x - J.diag[k]) * current - J.offdiag[k - 1] * before;
    const double next = k + 1 < m ? raw / J.offdiag[k] : raw;
    before = current;
    current = next;
    visit(current);
    const double mag = std::max(std::abs(before), std::abs(current));
    if (mag > kRescaleHigh || (mag > 0.0 && mag < kRescaleLow)) {
      before /= mag;
      current /= mag;
    }
  }
  return m - changes;
}

Enclosure gershgorin(const JacobiOperator& J) {
  require_nonempty(J);
  const double dmin = *std::min_element(J.diag.begin(), J.diag.end());
  const double dmax = *std::max_element(J.diag.begin(), J.diag.end());
  const double emax =
      J.offdiag.empty() ? 0.0 : *std::max_element(J.offdiag.begin(), J.offdiag.end());
  return {dmin - 2.0 * emax, dmax + 2.0 * emax};
}

double default_tolerance(const JacobiOperator& J) {
  const auto box = gershgorin(J);
  return 1e-12 * std::max(1.0, 0.5 * (box.hi - box.lo));
}

std::vector<double> eigenvalues(const JacobiOperator& J) {
  return eigenvalues(J, default_tolerance(J));
}

std::vector<double> eigenvalues(const JacobiOperator& J, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  auto box = gershgorin(J);
  const double pad = 1e-9 * operator_scale(J);
  box.lo -= pad;
  box.hi += pad;
  const std::size_t m = J.size();
  std::vector<double> roots(m);
  const auto count = static_cast<std::ptrdiff_t>(m);
  bool failed = false;
  std::size_t failed_index = 0;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    try {
      roots[static_cast<std::size_t>(j)] = bisect_index(J, static_cast<std::size_t>(j), box, tol);
    } catch (const Error&) {
#pragma omp critical(drg_eigen_failure)
      {
        failed = true;
        failed_index = static_cast<std::size_t>(j);
      }
    }
  }
  if (failed) {
    throw Error(ErrorCode::ToleranceTooSmall,
                "bisection reached float resolution before width " + std::to_string(tol),
                failed_index);
  }
  check_separated(roots, tol);
  return roots;
}

std::vector<double> eigenvalues_serial(const JacobiOperator& J, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  auto box = gershgorin(J);
  const double pad = 1e-9 * operator_scale(J);
  box.lo -= pad;
  box.hi += pad;
  std::vector<double> roots(J.size());
  for (std::size_t j = 0; j < roots.size(); ++j) roots[j] = bisect_index(J, j, box, tol);
  check_separated(roots, tol);
  return roots;
}

FirstKindEvaluation eval_first_kind(const IntersectionSequence& is, double tau, double x) {
  return {x, tau, first_kind_values(build_jacobi(is, tau), x)};
}

std::vector<double> eigenfunction_coeffs(const IntersectionSequence& is, double tau,
                                         double lambda, double rel_tol) {
  const auto J = build_jacobi(is, tau);
  auto p = first_kind_values(J, lambda);
  const double boundary = p.back();
  p.pop_back();
  const double norm = std::sqrt(std::inner_product(p.begin(), p.end(), p.begin(), 0.0));
  if (std::abs(boundary) > rel_tol * norm * operator_scale(J)) {
    throw Error(ErrorCode::NotAnEigenvalue,
                std::to_string(lambda) + " is not an eigenvalue of J_tau (boundary term " +
                    std::to_string(boundary) + ")");
  }
  return p;
}

WeightFormulas weight_formulas(const IntersectionSequence& is, double tau, double lambda) {
  const auto J = build_jacobi(is, tau);
  std::vector<double> p, dp;
  first_kind_with_derivative(J, lambda, p, dp);
  const std::size_t n = J.size() - 1;
  double sum_sq = 0.0;
  for (std::size_t k = 0; k <= n; ++k) sum_sq += p[k] * p[k];
  return {1.0 / sum_sq, 1.0 / (p[n] * dp[n + 1])};
}

double atom_weight(const IntersectionSequence& is, double tau, double lambda, double rel_tol) {
  const auto w = weight_formulas(is, tau, lambda);
  if (!(std::abs(w.direct - w.kernel) <= rel_tol * std::abs(w.direct))) {
    throw Error(ErrorCode::WeightMismatch,
                "weight at " + std::to_string(lambda) + ": sum form " + std::to_string(w.direct) +
                    " vs derivative form " + std::to_string(w.kernel));
  }
  return w.direct;
}

double SpectralMeasure::total_weight() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.weight;
  return s;
}

SpectralMeasure spectral_measure(const IntersectionSequence& is,
                                 std::optional<std::size_t> vertex_count) {
  const double tau = canonical_tau(is);
  const auto J = build_jacobi(is, tau);
  SpectralMeasure mu{tau, {}};
  for (double lambda : eigenvalues(J)) {
    mu.atoms.push_back({lambda, atom_weight(is, tau, lambda), std::nullopt});
  }
  if (vertex_count) {
    const auto N = static_cast<double>(*vertex_count);
    std::size_t total = 0;
    for (auto& atom : mu.atoms) {
      const double expected = N * atom.weight;
      const double rounded = std::round(expected);
      if (!(std::abs(expected - rounded) < 1e-6 * N) || rounded < 1.0) {
        throw Error(ErrorCode::MultiplicityNotIntegral,
                    "N*w = " + std::to_string(expected) + " at eigenvalue " +
                        std::to_string(atom.lambda));
      }
      atom.multiplicity = static_cast<std::size_t>(rounded);
      total += *atom.multiplicity;
    }
    if (total != *vertex_count) {
      throw Error(ErrorCode::MultiplicityNotIntegral,
                  "multiplicities sum to " + std::to_string(total) + ", expected " +
                      std::to_string(*vertex_count));
    }
  }
  return mu;
}

bool check_interlacing(const IntersectionSequence& is, double tau1, double tau2, double tol) {
  if (tau1 == tau2) {
    throw Error(ErrorCode::InvalidArgument, "interlacing needs two distinct tau values");
  }
  const auto first = eigenvalues(build_jacobi(is, tau1));
  const auto second = eigenvalues(build_jacobi(is, tau2));
  struct Tagged {
    double value;
    int source;
  };
  std::vector<Tagged> merged;
  for (double v : first) merged.push_back({v, 0});
  for (double v : second) merged.push_back({v, 1});
  std::sort(merged.begin(), merged.end(),
            [](const Tagged& l, const Tagged& r) { return l.value < r.value; });
  for (std::size_t i = 1; i < merged.size(); ++i) {
    if (merged[i].source == merged[i - 1].source) return false;
    if (!(merged[i].value - merged[i - 1].value > tol)) return false;
  }
  return true;
}

double cd_kernel(const IntersectionSequence& is, std::size_t k, double x, double y) {
  const std::size_t d = is.diameter();
  if (k + 1 > d) throw Error(ErrorCode::InvalidArgument, "kernel index must be <= d-1", k);
  const auto J = build_jacobi(is, canonical_tau(is));
  std::vector<double> px, dpx, py, dpy;
  first_kind_with_derivative(J, x, px, dpx);
  first_kind_with_derivative(J, y, py, dpy);

  double sum = 0.0, magnitude = 0.0;
  for (std::size_t j = 0; j <= k; ++j) {
    sum += px[j] * py[j];
    magnitude += std::abs(px[j] * py[j]);
  }
  const double beta = J.offdiag[k];
  double closed = 0.0;
  double bound = 1e-9 * std::max(1.0, magnitude);
  if (x == y) {
    closed = beta * (dpx[k + 1] * px[k] - dpx[k] * px[k + 1]);
  } else {
    const double lhs = py[k] * px[k + 1];
    const double rhs = px[k] * py[k + 1];
    closed = beta * (lhs - rhs) / (x - y);
    bound += 8.0 * 2.2e-16 * beta * (std::abs(lhs) + std::abs(rhs)) / std::abs(x - y);
  }
  if (!(std::abs(closed - sum) <= bound)) {
    throw Error(ErrorCode::KernelMismatch,
                "K_" + std::to_string(k) + ": sum " + std::to_string(sum) + " vs closed form " +
                    std::to_string(closed));
  }
  return sum;
}

}  // namespace drg
