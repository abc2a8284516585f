#include "drg/families.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "drg/error.hpp"

namespace drg {
namespace {

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) throw Error(ErrorCode::Overflow, "moment overflow");
  return out;
}

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw Error(ErrorCode::Overflow, "moment overflow");
  return out;
}

std::uint64_t parse_natural(std::string_view text, std::string_view context) {
  std::uint64_t out = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::InvalidArgument,
                "expected a natural number in '" + std::string(context) + "'");
  }
  return out;
}

}  // namespace

FamilyGenerator::FamilyGenerator(std::uint64_t degree, std::string description,
                                 std::function<Term(std::size_t)> terms)
    : degree_(degree), description_(std::move(description)), terms_(std::move(terms)) {
  const auto first = term(1);
  if (first.a != 1 || first.b != degree_) {
    throw Error(ErrorCode::InvalidSequence, "family must start with (1, degree)", 1);
  }
}

FamilyGenerator::Term FamilyGenerator::term(std::size_t k) const {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "family terms start at k = 1");
  const auto t = terms_(k);
  if (t.a == 0 || t.b == 0) {
    throw Error(ErrorCode::InvalidSequence, "a_k and b_k must be positive", k);
  }
  return t;
}

std::int64_t FamilyGenerator::alpha(std::size_t k) const {
  if (k == 0) return 0;
  const auto here = term(k);
  const auto next = term(k + 1);
  const auto used = static_cast<std::int64_t>(here.a) + static_cast<std::int64_t>(next.b);
  const auto value = static_cast<std::int64_t>(degree_) - used;
  if (value < 0) {
    throw Error(ErrorCode::InvalidSequence, "alpha_" + std::to_string(k) + " is negative", k);
  }
  return value;
}

std::uint64_t FamilyGenerator::offdiag_squared(std::size_t k) const {
  const auto t = term(k);
  return checked_mul(t.a, t.b);
}

FamilyGenerator tree_sequence(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "tree degree must be >= 2", n);
  return FamilyGenerator(n, "tree:" + std::to_string(n), [n](std::size_t k) {
    return k == 1 ? FamilyGenerator::Term{1, n} : FamilyGenerator::Term{1, n - 1};
  });
}

FamilyGenerator periodic_sequence(std::vector<FamilyGenerator::Term> pairs, std::size_t period) {
  if (pairs.empty() || period == 0 || period > pairs.size()) {
    throw Error(ErrorCode::InvalidArgument, "period must be between 1 and the number of pairs");
  }
  std::string desc = "custom:";
  for (const auto& p : pairs) desc += std::to_string(p.a) + "," + std::to_string(p.b) + ";";
  desc += "period=" + std::to_string(period);
  const std::uint64_t degree = pairs.front().b;
  return FamilyGenerator(degree, std::move(desc), [pairs = std::move(pairs), period](std::size_t k) {
    const std::size_t i = k - 1;
    if (i < pairs.size()) return pairs[i];
    const std::size_t start = pairs.size() - period;
    return pairs[start + (i - start) % period];
  });
}

FamilyGenerator parse_family(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::InvalidArgument, "family must be tree:n or custom:...");
  }
  const auto kind = spec.substr(0, colon);
  auto body = spec.substr(colon + 1);
  if (kind == "tree") return tree_sequence(parse_natural(body, spec));
  if (kind != "custom") throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(kind) + "'");

  std::vector<FamilyGenerator::Term> pairs;
  std::size_t period = 0;
  while (!body.empty()) {
    const auto semi = body.find(';');
    const auto item = body.substr(0, semi);
    body = semi == std::string_view::npos ? std::string_view{} : body.substr(semi + 1);
    if (item.empty()) continue;
    if (item.starts_with("period=")) {
      period = parse_natural(item.substr(7), spec);
      continue;
    }
    const auto comma = item.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::InvalidArgument, "expected 'a,b' pair in '" + std::string(spec) + "'");
    }
    pairs.push_back({parse_natural(item.substr(0, comma), spec), parse_natural(item.substr(comma + 1), spec)});
  }
  return periodic_sequence(std::move(pairs), period);
}

JacobiOperator truncated_jacobi(const FamilyGenerator& gen, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "truncation size must be >= 1");
  JacobiOperator J;
  J.diag.resize(m);
  J.offdiag.resize(m - 1);
  for (std::size_t k = 0; k < m; ++k) J.diag[k] = static_cast<double>(gen.alpha(k));
  for (std::size_t k = 1; k < m; ++k) {
    J.offdiag[k - 1] = std::sqrt(static_cast<double>(gen.offdiag_squared(k)));
  }
  return J;
}

std::uint64_t moment_truncated(const FamilyGenerator& gen, std::size_t k, std::size_t size) {
  if (size == 0) throw Error(ErrorCode::InvalidArgument, "truncation size must be >= 1");
  std::vector<std::uint64_t> up(size), stay(size);
  for (std::size_t j = 0; j < size; ++j) {
    stay[j] = static_cast<std::uint64_t>(gen.alpha(j));
    if (j > 0) up[j] = gen.offdiag_squared(j);
  }
  // walks[j]: weighted walks from level 0 to level j, up steps carrying a_j b_j.
  std::vector<std::uint64_t> walks(size, 0), next(size);
  walks[0] = 1;
  for (std::size_t step = 0; step < k; ++step) {
    for (std::size_t j = 0; j < size; ++j) {
      std::uint64_t v = checked_mul(walks[j], stay[j]);
      if (j > 0) v = checked_add(v, checked_mul(walks[j - 1], up[j]));
      if (j + 1 < size) v = checked_add(v, walks[j + 1]);
      next[j] = v;
    }
    walks.swap(next);
  }
  return walks[0];
}

std::uint64_t moment(const FamilyGenerator& gen, std::size_t k) {
  return moment_truncated(gen, k, (k + 1) / 2 + 1);
}

double kesten_mckay_density(std::uint64_t n, double x) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "tree degree must be >= 2", n);
  const double nd = static_cast<double>(n);
  const double r2 = 4.0 * (nd - 1.0);
  const double inside = r2 - x * x;
  if (inside <= 0.0) return 0.0;
  return nd * std::sqrt(inside) / (2.0 * std::numbers::pi * (nd * nd - x * x));
}

double density_moment(std::uint64_t n, std::size_t k, double quad_tol) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "tree degree must be >= 2", n);
  if (!(quad_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "quad_tol must be positive");
  const double nd = static_cast<double>(n);
  const double radius = spectral_radius_tree(n);
  const double r2 = radius * radius;
  const double gap = (nd - 2.0) * (nd - 2.0);  // n^2 - R^2
  const auto power = static_cast<int>(k);
  // x = R sin(t): dx = R cos(t) dt, sqrt(R^2 - x^2) = R cos(t) and
  // n^2 - x^2 = (n-2)^2 + R^2 cos^2(t), so the integrand stays bounded.
  auto integrand = [&](double t) {
    const double c = std::cos(t);
    const double x = radius * std::sin(t);
    return std::pow(x, power) * nd * r2 * c * c / (2.0 * std::numbers::pi * (gap + r2 * c * c));
  };
  double error = 0.0, l1 = 0.0;
  const double half = std::numbers::pi / 2.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, -half, half, 12, 1e-13, &error, &l1);
  // Absolute for O(1) moments, relative once the moment itself is large.
  if (!(error <= quad_tol * std::max(1.0, l1)) || !std::isfinite(value)) {
    throw Error(ErrorCode::QuadratureNotConverged,
                "moment " + std::to_string(k) + " error estimate " + std::to_string(error));
  }
  return value;
}

double spectral_radius_tree(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "tree degree must be >= 2", n);
  return 2.0 * std::sqrt(static_cast<double>(n - 1));
}

double truncated_spectral_radius(const FamilyGenerator& gen, std::size_t m) {
  const auto roots = eigenvalues(truncated_jacobi(gen, m));
  return std::max(std::abs(roots.front()), std::abs(roots.back()));
}

}  // namespace drg
