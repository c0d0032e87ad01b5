#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "jacrec/numerics.hpp"

namespace jacrec {

namespace detail {

double beta_real(double x, double y) {
  if (x + y < 170.0) return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y);
  return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

}  // namespace detail

std::pair<double, double> legendre_with_derivative(int k, double x) {
  double p0 = 1.0;
  double p1 = x;
  if (k == 0) return {1.0, 0.0};
  for (int n = 2; n <= k; ++n) {
    const double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
    p0 = p1;
    p1 = p2;
  }
  const double dp = k * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

namespace {

// Legendre value and derivative in extended precision for node refinement.
std::pair<long double, long double> legendre_ld(int k, long double x) {
  long double p0 = 1.0L;
  long double p1 = x;
  if (k == 0) return {1.0L, 0.0L};
  for (int n = 2; n <= k; ++n) {
    const long double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
    p0 = p1;
    p1 = p2;
  }
  return {p1, k * (x * p1 - p0) / (x * x - 1.0L)};
}

}  // namespace

namespace {

QuadratureRule compute_gauss_legendre(int k) {
  QuadratureRule rule;
  rule.nodes.assign(k, 0.0);
  rule.weights.assign(k, 0.0);
  rule.exactness_degree = 2 * k - 1;
  const int half = k / 2;
  // Positive roots by Newton from Chebyshev guesses, mirrored; an odd rule has the node 0.
  for (int i = 0; i < half; ++i) {
    long double x = std::cos(std::numbers::pi * (i + 0.75) / (k + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, d] = legendre_ld(k, x);
      const long double step = p / d;
      x -= step;
      if (std::fabs(static_cast<double>(step)) < 1e-15 * 1e-3) break;
    }
    const long double dp = legendre_ld(k, x).second;
    const double w = static_cast<double>(2.0L / ((1.0L - x * x) * dp * dp));
    rule.nodes[k - 1 - i] = static_cast<double>(x);
    rule.nodes[i] = -static_cast<double>(x);
    rule.weights[k - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (k % 2 == 1) {
    const long double dp = legendre_ld(k, 0.0L).second;
    rule.nodes[half] = 0.0;
    rule.weights[half] = static_cast<double>(2.0L / (dp * dp));
  }
  return rule;
}

}  // namespace

// Rules are memoized; table seeds request the same few sizes many times.
const QuadratureRule& gauss_legendre(int k) {
  if (k < 1) throw DomainError("gauss_legendre: k must be positive");
  static std::mutex mutex;
  static std::map<int, QuadratureRule> cache;
  const std::lock_guard lock(mutex);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, compute_gauss_legendre(k)).first;
  return it->second;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double v = f(rule.nodes[i]);
    if (!std::isfinite(v)) throw EvaluationError("integrate: non-finite integrand sample");
    s += rule.weights[i] * v;
  }
  return s;
}

}  // namespace jacrec
