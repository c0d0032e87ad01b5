#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "jacrec/field.hpp"

namespace jacrec {

// Rising factorial (a)_n = a(a+1)...(a+n-1).
template <Field T>
T pochhammer(const T& a, int n) {
  if (n < 0) throw DomainError("pochhammer: n must be nonnegative");
  T r = lift(1, a);
  for (int k = 0; k < n; ++k) r *= a + k;
  return r;
}

template <Field T>
T factorial(int n, const T& like) {
  return pochhammer(lift(1, like), n);
}

// 2^e for an integer exponent, exact in exact modes.
template <Field T>
T pow2(long e, const T& like) {
  T base = lift(e >= 0 ? 2 : 1, like);
  if (e < 0) base = base / lift(2, like);
  T r = lift(1, like);
  for (long k = 0, n = e >= 0 ? e : -e; k < n; ++k) r *= base;
  return r;
}

// 2^e for a field-valued exponent; non-integer exponents require float mode.
template <Field T>
T pow2(const T& e) {
  if (const auto k = as_integer(e)) return pow2(*k, e);
  if (is_exact(e)) throw DomainError("pow2: exact mode requires an integer exponent");
  return from_double(std::exp2(to_double(e)), e);
}

namespace detail {
double beta_real(double x, double y);
}

// Euler Beta function. Positive integer arguments use the exact factorial form;
// other arguments need float mode.
template <Field T>
T beta_function(const T& x, const T& y) {
  if (!(x > lift(0, x)) || !(y > lift(0, y))) throw DomainError("beta_function: arguments must be positive");
  const auto ix = as_integer(x);
  const auto iy = as_integer(y);
  if (ix && iy && (is_exact(x) || *ix + *iy < 170)) {
    return factorial(static_cast<int>(*ix - 1), x) * factorial(static_cast<int>(*iy - 1), x) /
           factorial(static_cast<int>(*ix + *iy - 1), x);
  }
  if (is_exact(x)) throw DomainError("beta_function: exact mode requires positive integer arguments");
  return from_double(detail::beta_real(to_double(x), to_double(y)), x);
}

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing in (-1, 1)
  std::vector<double> weights;  // positive
  int exactness_degree = 0;     // 2k - 1
  std::size_t size() const { return nodes.size(); }
};

// k-point Gauss-Legendre rule on [-1, 1].
const QuadratureRule& gauss_legendre(int k);  // memoized; references stay valid

// Sum of w_i f(x_i); throws EvaluationError on a non-finite sample.
double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);

// Legendre P_k(x) and its derivative, used for node finding.
std::pair<double, double> legendre_with_derivative(int k, double x);

}  // namespace jacrec
