#pragma once

#include <string_view>
#include <vector>

#include "jacrec/numerics.hpp"

namespace jacrec {

template <Field T>
struct JacobiIndex {
  int n = 0;
  T alpha;
  T beta;
};

namespace detail {

template <Field T>
void check_jacobi_params(const T& alpha, const T& beta) {
  if (!(alpha > lift(-1, alpha))) throw DomainError("jacobi: alpha must exceed -1");
  if (!(beta > lift(-1, beta))) throw DomainError("jacobi: beta must exceed -1 (beta = -1 only via the integrated form)");
}

// Coefficients of 2n(n+a+b)(2n+a+b-2) P_n = (2n+a+b-1)[(2n+a+b)(2n+a+b-2)x + a^2-b^2] P_{n-1}
//                                          - 2(n+a-1)(n+b-1)(2n+a+b) P_{n-2}.
template <Field T>
T jacobi_step(int n, const T& a, const T& b, const T& x, const T& p1, const T& p2) {
  const T s = a + b + 2 * n;
  const T lead = 2 * n * (a + b + n) * (s - 2);
  const T c1 = (s - 1) * (s * (s - 2) * x + a * a - b * b);
  const T c2 = 2 * (a + (n - 1)) * (b + (n - 1)) * s;
  return (c1 * p1 - c2 * p2) / lead;
}

// Forward recurrence for beta > -1.
template <Field T>
std::vector<T> jacobi_forward(int nmax, const T& a, const T& b, const T& x) {
  std::vector<T> p;
  p.reserve(nmax + 1);
  p.push_back(lift(1, x));
  if (nmax == 0) return p;
  const T one = lift(1, x);
  p.push_back((a + 1) + (a + b + 2) * (x - one) / 2);
  for (int n = 2; n <= nmax; ++n) p.push_back(jacobi_step(n, a, b, x, p[n - 1], p[n - 2]));
  return p;
}

}  // namespace detail

// P_n^{(alpha,beta)}(x). beta = -1 is evaluated through
// P_n^{(a,-1)}(x) = (n+a)/n * (1+x)/2 * P_{n-1}^{(a,1)}(x).
template <Field T>
T jacobi_eval(int n, const T& alpha, const T& beta, const T& x) {
  if (n < 0) throw DomainError("jacobi: negative degree");
  if (beta == lift(-1, beta)) {
    if (n == 0) return lift(1, x);
    if (!(alpha > lift(-1, alpha))) throw DomainError("jacobi: alpha must exceed -1");
    const T inner = detail::jacobi_forward(n - 1, alpha, lift(1, beta), x).back();
    return (alpha + n) / n * (x + 1) / 2 * inner;
  }
  detail::check_jacobi_params(alpha, beta);
  return detail::jacobi_forward(n, alpha, beta, x).back();
}

template <Field T>
T jacobi_eval(const JacobiIndex<T>& idx, const T& x) {
  return jacobi_eval(idx.n, idx.alpha, idx.beta, x);
}

// P_0 ... P_nmax at x in one pass.
template <Field T>
std::vector<T> jacobi_all(int nmax, const T& alpha, const T& beta, const T& x) {
  if (nmax < 0) throw DomainError("jacobi_all: negative degree");
  if (beta == lift(-1, beta)) {
    std::vector<T> out;
    for (int n = 0; n <= nmax; ++n) out.push_back(jacobi_eval(n, alpha, beta, x));
    return out;
  }
  detail::check_jacobi_params(alpha, beta);
  return detail::jacobi_forward(nmax, alpha, beta, x);
}

// Hypergeometric form (a+1)_n/n! 2F1(-n, n+a+b+1; a+1; (1-x)/2); independent of the recurrence.
template <Field T>
T jacobi_hyp(int n, const T& alpha, const T& beta, const T& x) {
  if (n < 0) throw DomainError("jacobi_hyp: negative degree");
  const T one = lift(1, x);
  const T t = (one - x) / 2;
  T term = one;
  T sum = one;
  for (int k = 0; k < n; ++k) {
    const T den = (alpha + 1 + k) * (k + 1);
    if (is_zero(den)) throw PoleError("jacobi_hyp: lower parameter alpha+1 hits a pole");
    term = term * (k - n) * (alpha + beta + (n + 1 + k)) / den * t;
    sum += term;
  }
  return pochhammer(alpha + 1, n) / factorial(n, x) * sum;
}

template <Field T>
T jacobi_hyp(const JacobiIndex<T>& idx, const T& x) {
  return jacobi_hyp(idx.n, idx.alpha, idx.beta, x);
}

// Integrated Legendre polynomial: p_1 = x+1, p_n = (x^2-1)/(2(n-1)) P_{n-2}^{(1,1)}(x).
template <Field T>
T integrated_legendre(int n, const T& x) {
  if (n < 1) throw DomainError("integrated_legendre: n must be at least 1");
  if (n == 1) return x + 1;
  const T one = lift(1, x);
  return (x * x - one) / (2 * (n - 1)) * jacobi_eval(n - 2, one, one, x);
}

// Integrated Jacobi polynomial p_n^{(alpha,0)}(x) = int_{-1}^x P_{n-1}^{(alpha,0)}
// = 2/(n+alpha-1) P_n^{(alpha-1,-1)}(x). alpha = 0 is the integrated Legendre case.
template <Field T>
T integrated_jacobi(int n, const T& alpha, const T& x) {
  if (n < 1) throw DomainError("integrated_jacobi: n must be at least 1");
  if (n == 1) return x + 1;
  if (alpha == lift(0, alpha)) return integrated_legendre(n, x);
  if (!(alpha > lift(0, alpha))) throw DomainError("integrated_jacobi: alpha must be nonnegative");
  return lift(2, x) / (alpha + (n - 1)) * jacobi_eval(n, alpha - 1, lift(-1, alpha), x);
}

// Identities of the classical Jacobi calculus, each written as LHS - RHS.
enum class IdentityId { L1, L2, L3, L4, L5, L6, L7, ThreeTerm, Reflect, HypB };

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::L1, IdentityId::L2, IdentityId::L3, IdentityId::L4,        IdentityId::L5,
    IdentityId::L6, IdentityId::L7, IdentityId::ThreeTerm, IdentityId::Reflect, IdentityId::HypB};

std::string_view identity_name(IdentityId id);
IdentityId identity_from_name(std::string_view name);  // throws std::invalid_argument

// Whether (n, alpha, beta) lies in the validity regime of the identity:
// alpha-1 > -1 where P^{(alpha-1,.)} appears, beta-1 >= -1 where P^{(.,beta-1)} appears.
template <Field T>
bool identity_in_regime(IdentityId id, int n, const T& alpha, const T& beta) {
  const T zero = lift(0, alpha);
  const bool a_pos = alpha > zero;
  const bool b_nonneg = beta >= zero;
  if (!(alpha > lift(-1, alpha)) || !(beta > lift(-1, beta)) || n < 0) return false;
  switch (id) {
    case IdentityId::L1: return a_pos && b_nonneg;
    case IdentityId::L2:
    case IdentityId::L3:
    case IdentityId::L6:
    case IdentityId::Reflect:
    case IdentityId::HypB: return true;
    case IdentityId::L4: return n >= 1 && b_nonneg;
    case IdentityId::L5: return n >= 1 && a_pos;
    case IdentityId::L7: return n >= 1 && a_pos && b_nonneg;
    case IdentityId::ThreeTerm: return n >= 2;
  }
  return false;
}

// LHS - RHS of the chosen identity at (n, a, b, x).
template <Field T>
T identity_residual(IdentityId id, int n, const T& a, const T& b, const T& x) {
  if (!identity_in_regime(id, n, a, b)) throw DomainError("identity_residual: parameters outside the identity's regime");
  const T one = lift(1, x);
  auto P = [&](int k, const T& al, const T& be) { return jacobi_eval(k, al, be, x); };
  switch (id) {
    case IdentityId::L1:  // (a+b+n)P_n = (b+n)P_n^{(a,b-1)} + (a+n)P_n^{(a-1,b)}
      return (a + b + n) * P(n, a, b) - ((b + n) * P(n, a, b - 1) + (a + n) * P(n, a - 1, b));
    case IdentityId::L2:  // (2+a+b+2n)(x-1)/2 P_n^{(a+1,b)} = (n+1)P_{n+1} - (1+a+n)P_n
      return (a + b + (2 + 2 * n)) * (x - one) / 2 * P(n, a + 1, b) - ((n + 1) * P(n + 1, a, b) - (a + (1 + n)) * P(n, a, b));
    case IdentityId::L3:  // (2+a+b+2n)(x+1)/2 P_n^{(a,b+1)} = (n+1)P_{n+1} + (1+b+n)P_n
      return (a + b + (2 + 2 * n)) * (x + one) / 2 * P(n, a, b + 1) - ((n + 1) * P(n + 1, a, b) + (b + (1 + n)) * P(n, a, b));
    case IdentityId::L4:  // (a+b+2n)P_n^{(a,b-1)} = (a+b+n)P_n + (a+n)P_{n-1}
      return (a + b + 2 * n) * P(n, a, b - 1) - ((a + b + n) * P(n, a, b) + (a + n) * P(n - 1, a, b));
    case IdentityId::L5:  // (a+b+2n)P_n^{(a-1,b)} = (a+b+n)P_n - (b+n)P_{n-1}
      return (a + b + 2 * n) * P(n, a - 1, b) - ((a + b + n) * P(n, a, b) - (b + n) * P(n - 1, a, b));
    case IdentityId::L6:  // 2P_n = (1+x)P_n^{(a,b+1)} + (1-x)P_n^{(a+1,b)}
      return 2 * P(n, a, b) - ((one + x) * P(n, a, b + 1) + (one - x) * P(n, a + 1, b));
    case IdentityId::L7:  // P_{n-1} = P_n^{(a,b-1)} - P_n^{(a-1,b)}
      return P(n - 1, a, b) - (P(n, a, b - 1) - P(n, a - 1, b));
    case IdentityId::ThreeTerm:
      return P(n, a, b) - detail::jacobi_step(n, a, b, x, P(n - 1, a, b), P(n - 2, a, b));
    case IdentityId::Reflect: {  // P_n^{(a,b)}(-x) = (-1)^n P_n^{(b,a)}(x)
      const T sign = lift(n % 2 == 0 ? 1 : -1, x);
      return jacobi_eval(n, a, b, -x) - sign * P(n, b, a);
    }
    case IdentityId::HypB: {  // P_n^{(a,b)}(x) = (-1)^n (b+1)_n/n! 2F1(-n, n+a+b+1; b+1; (1+x)/2)
      const T sign = lift(n % 2 == 0 ? 1 : -1, x);
      return P(n, a, b) - sign * jacobi_hyp(n, b, a, -x);
    }
  }
  throw std::invalid_argument("identity_residual: unknown identity");
}

}  // namespace jacrec
