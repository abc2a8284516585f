#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "drg/error.hpp"

namespace drg::oracle {
namespace {

void require_dense_size(std::size_t n) {
  if (n > kMaxDenseVertices) {
    throw Error(ErrorCode::TooLarge,
                "dense oracle is limited to " + std::to_string(kMaxDenseVertices) + " vertices", n);
  }
}

template <typename T>
Matrix<T> multiply_impl(const Matrix<T>& x, const Matrix<T>& y) {
  const std::size_t n = x.n;
  Matrix<T> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const T xil = x(i, l);
      if (xil == T{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += xil * y(l, j);
    }
  return out;
}

}  // namespace

IntMatrix dense_adjacency(const Graph& g) {
  require_dense_size(g.vertex_count());
  IntMatrix a(g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

std::vector<IntMatrix> dense_distance_matrices(const Graph& g) {
  const auto adj = dense_adjacency(g);
  const std::size_t n = adj.n;
  IntMatrix dist(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> frontier{s};
    dist(s, s) = 0;
    for (std::int64_t level = 1; !frontier.empty(); ++level) {
      std::vector<std::size_t> next;
      for (std::size_t u : frontier)
        for (std::size_t w = 0; w < n; ++w)
          if (adj(u, w) == 1 && dist(s, w) < 0) {
            dist(s, w) = level;
            next.push_back(w);
          }
      frontier = std::move(next);
    }
  }
  const auto diam = *std::max_element(dist.data.begin(), dist.data.end());
  std::vector<IntMatrix> out(static_cast<std::size_t>(diam) + 1, IntMatrix(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[static_cast<std::size_t>(dist(i, j))](i, j) = 1;
  return out;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) { return multiply_impl(x, y); }
DenseMatrix multiply(const DenseMatrix& x, const DenseMatrix& y) { return multiply_impl(x, y); }

DenseMatrix to_dense(const IntMatrix& m) {
  DenseMatrix out(m.n);
  std::transform(m.data.begin(), m.data.end(), out.data.begin(),
                 [](std::int64_t v) { return static_cast<double>(v); });
  return out;
}

double max_abs(const DenseMatrix& m) {
  double best = 0.0;
  for (double v : m.data) best = std::max(best, std::abs(v));
  return best;
}

bool is_symmetric(const DenseMatrix& m) {
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = i + 1; j < m.n; ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

Eigensystem dense_symmetric_eigen(const DenseMatrix& m, double tol) {
  require_dense_size(m.n);
  const std::size_t n = m.n;
  DenseMatrix a = m;
  DenseMatrix q = DenseMatrix::identity(n);
  const double scale = std::max(1.0, max_abs(m));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps && off_norm() > 1e-15 * scale; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t r = p + 1; r < n; ++r) {
        const double apr = a(p, r);
        if (std::abs(apr) < 1e-300) continue;
        // Rotation angle zeroing a(p, r).
        const double theta = (a(r, r) - a(p, p)) / (2.0 * apr);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akr = a(k, r);
          a(k, p) = c * akp - s * akr;
          a(k, r) = s * akp + c * akr;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), ark = a(r, k);
          a(p, k) = c * apk - s * ark;
          a(r, k) = s * apk + c * ark;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double qkp = q(k, p), qkr = q(k, r);
          q(k, p) = c * qkp - s * qkr;
          q(k, r) = s * qkp + c * qkr;
        }
      }
    }
  }
  if (off_norm() > 1e-12 * scale) {
    throw Error(ErrorCode::NoConvergence, "Jacobi rotations did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  Eigensystem es;
  es.vectors = DenseMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    es.values.push_back(a(order[j], order[j]));
    for (std::size_t i = 0; i < n; ++i) es.vectors(i, j) = q(i, order[j]);
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += es.vectors(i, k) * es.values[k] * es.vectors(j, k);
      es.residual = std::max(es.residual, std::abs(m(i, j) - s));
    }
  if (!(es.residual < tol)) {
    throw Error(ErrorCode::NoConvergence,
                "reconstruction residual " + std::to_string(es.residual) + " above tolerance");
  }

  const double gap = 1e-6 * scale;
  for (double v : es.values) {
    if (!es.clusters.empty() && v - es.clusters.back().value <= gap) {
      ++es.clusters.back().multiplicity;
    } else {
      es.clusters.push_back({v, 1});
    }
  }
  // Report each cluster at its mean.
  std::size_t start = 0;
  for (auto& c : es.clusters) {
    double sum = 0.0;
    for (std::size_t j = start; j < start + c.multiplicity; ++j) sum += es.values[j];
    c.value = sum / static_cast<double>(c.multiplicity);
    start += c.multiplicity;
  }
  return es;
}

bool recurrence_holds(const Graph& g, const IntersectionSequence& is) {
  const auto mats = dense_distance_matrices(g);
  const std::size_t d = is.diameter();
  const std::size_t n = g.vertex_count();
  const IntMatrix& adj = mats.at(1);
  const IntMatrix zero(n);
  auto shell = [&](std::size_t k) -> const IntMatrix& { return k < mats.size() ? mats[k] : zero; };
  for (std::size_t k = 0; k <= d; ++k) {
    const auto lhs = multiply(adj, shell(k));
    IntMatrix rhs(n);
    const std::int64_t up = k < d ? static_cast<std::int64_t>(is.a_at(k + 1)) : 0;
    const std::int64_t stay = is.alpha(k);
    const std::int64_t down = k > 0 ? static_cast<std::int64_t>(is.b_at(k)) : 0;
    for (std::size_t e = 0; e < n * n; ++e) {
      rhs.data[e] = up * shell(k + 1).data[e] + stay * shell(k).data[e] +
                    (k > 0 ? down * shell(k - 1).data[e] : 0);
    }
    if (!(lhs == rhs)) return false;
  }
  return mats.size() == d + 1;
}

std::vector<DenseMatrix> normalized_distance_matrices(const Graph& g) {
  std::vector<DenseMatrix> out;
  for (const auto& shell : dense_distance_matrices(g)) {
    const double deg = static_cast<double>(
        std::accumulate(shell.data.begin(), shell.data.begin() + static_cast<std::ptrdiff_t>(shell.n),
                        std::int64_t{0}));
    auto m = to_dense(shell);
    for (double& v : m.data) v /= std::sqrt(deg);
    out.push_back(std::move(m));
  }
  return out;
}

FirstKindMatrices first_kind_matrices(const Graph& g, const IntersectionSequence& is, double tau) {
  const std::size_t n = g.vertex_count();
  const std::size_t d = is.diameter();
  const auto adj = to_dense(dense_adjacency(g));
  const auto normalized = normalized_distance_matrices(g);
  auto beta = [&](std::size_t k) {
    return std::sqrt(static_cast<double>(is.a_at(k)) * static_cast<double>(is.b_at(k)));
  };

  FirstKindMatrices out;
  out.basis.push_back(DenseMatrix::identity(n));
  DenseMatrix p1 = adj;
  for (double& v : p1.data) v /= beta(1);
  out.basis.push_back(std::move(p1));
  for (std::size_t k = 1; k < d; ++k) {
    auto next = multiply(adj, out.basis[k]);
    for (std::size_t e = 0; e < n * n; ++e) {
      next.data[e] = (next.data[e] - static_cast<double>(is.alpha(k)) * out.basis[k].data[e] -
                      beta(k) * out.basis[k - 1].data[e]) /
                     beta(k + 1);
    }
    out.basis.push_back(std::move(next));
  }

  for (std::size_t k = 0; k <= d; ++k) {
    if (k >= normalized.size()) {
      throw Error(ErrorCode::BasisMismatch, "graph diameter is smaller than the sequence's", k);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(out.basis[k](i, j) - normalized[k](i, j)) > 1e-10) {
          throw Error(ErrorCode::BasisMismatch,
                      "P_" + std::to_string(k) + "(A) differs from the normalised A_" +
                          std::to_string(k) + " at (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")",
                      k);
        }
      }
  }

  out.boundary = multiply(adj, out.basis[d]);
  for (std::size_t e = 0; e < n * n; ++e) {
    out.boundary.data[e] += -tau * out.basis[d].data[e] - beta(d) * out.basis[d - 1].data[e];
  }
  return out;
}

DenseMatrix matrix_poly_firstkind(const Graph& g, const IntersectionSequence& is, double tau) {
  return first_kind_matrices(g, is, tau).boundary;
}

double operator_norm(const DenseMatrix& m, double tol) {
  require_dense_size(m.n);
  const std::size_t n = m.n;
  std::vector<double> v(n), mv(n), mmv(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.1 * static_cast<double>(i % 7);
  auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += m(i, j) * in[j];
      out[i] = s;
    }
  };
  auto normalize = [](std::vector<double>& x) {
    const double len = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    if (len > 0.0)
      for (double& e : x) e /= len;
    return len;
  };
  normalize(v);
  double previous = -1.0;
  for (int iter = 0; iter < 100000; ++iter) {
    apply(v, mv);
    // Rayleigh quotient of M^2 for unit v is |Mv|^2.
    const double rho = std::sqrt(std::inner_product(mv.begin(), mv.end(), mv.begin(), 0.0));
    if (rho == 0.0) return 0.0;
    if (std::abs(rho - previous) <= tol * std::max(1.0, rho)) return rho;
    previous = rho;
    apply(mv, mmv);
    normalize(mmv);
    v.swap(mmv);
  }
  throw Error(ErrorCode::NoConvergence, "power iteration did not converge");
}

}  // namespace drg::oracle
