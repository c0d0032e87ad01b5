#pragma once

#include <optional>
#include <vector>

#include "jacrec/numerics.hpp"

namespace jacrec {

// ---------------------------------------------------------------------------
// Generalized hypergeometric series pFq with a terminating upper parameter.

template <Field T>
struct PFQSpec {
  std::vector<T> upper;
  std::vector<T> lower;
  T argument;
};

// Largest k with a nonzero term: min(-a) over nonpositive-integer upper parameters.
template <Field T>
std::optional<int> termination_index(const std::vector<T>& upper) {
  std::optional<int> k;
  for (const T& a : upper) {
    if (is_nonpositive_integer(a)) {
      const int t = static_cast<int>(-*as_integer(a));
      if (!k || t < *k) k = t;
    }
  }
  return k;
}

// Coefficients c_k of the terminating series, value = sum_k c_k x^k.
template <Field T>
std::vector<T> pfq_coefficients(const std::vector<T>& upper, const std::vector<T>& lower, const T& like) {
  const auto kmax = termination_index(upper);
  if (!kmax) throw DomainError("pfq: no nonpositive integer upper parameter; series does not terminate");
  std::vector<T> c;
  c.reserve(*kmax + 1);
  c.push_back(lift(1, like));
  for (int k = 0; k < *kmax; ++k) {
    T num = c.back();
    T den = lift(k + 1, like);
    for (const T& a : upper) num *= a + k;
    for (const T& b : lower) {
      if (is_zero(b + k)) throw PoleError("pfq: lower parameter reaches a pole before termination");
      den *= b + k;
    }
    c.push_back(num / den);
  }
  return c;
}

template <Field T>
T pfq_terminating(const PFQSpec<T>& spec) {
  const auto c = pfq_coefficients(spec.upper, spec.lower, spec.argument);
  T sum = lift(0, spec.argument);
  for (auto it = c.rbegin(); it != c.rend(); ++it) sum = sum * spec.argument + *it;  // Horner
  return sum;
}

// (c-b)_m/(c)_m: value of 2F1(-m, b; c; 1).
template <Field T>
T chu_vandermonde_rhs(int m, const T& b, const T& c) {
  if (m < 0) throw DomainError("chu_vandermonde_rhs: m must be nonnegative");
  const T den = pochhammer(c, m);
  if (is_zero(den)) throw PoleError("chu_vandermonde_rhs: (c)_m vanishes");
  return pochhammer(c - b, m) / den;
}

// (c-a)_m (c-b)_m / ((c)_m (c-a-b)_m): value of the balanced 3F2(-m, a, b; c, 1+a+b-c-m; 1).
template <Field T>
T pfaff_saalschutz_rhs(int m, const T& a, const T& b, const T& c) {
  if (m < 0) throw DomainError("pfaff_saalschutz_rhs: m must be nonnegative");
  const T den = pochhammer(c, m) * pochhammer(c - a - b, m);
  if (is_zero(den)) throw PoleError("pfaff_saalschutz_rhs: denominator vanishes");
  return pochhammer(c - a, m) * pochhammer(c - b, m) / den;
}

template <Field T>
PFQSpec<T> pfaff_saalschutz_series(int m, const T& a, const T& b, const T& c) {
  const T one = lift(1, a);
  return {{lift(-m, a), a, b}, {c, one + a + b - c - m}, one};
}

namespace detail {
double gamma_checked(double x);
}

// Gauss summation 2F1(a, b; c; 1) = G(c)G(c-a-b)/(G(c-a)G(c-b)).
// Terminating cases go through Chu-Vandermonde and stay exact.
template <Field T>
T gauss_sum_rhs(const T& a, const T& b, const T& c) {
  if (is_nonpositive_integer(a)) return chu_vandermonde_rhs(static_cast<int>(-*as_integer(a)), b, c);
  if (is_nonpositive_integer(b)) return chu_vandermonde_rhs(static_cast<int>(-*as_integer(b)), a, c);
  if (!(c - a - b > lift(0, a))) throw DomainError("gauss_sum_rhs: requires c-a-b > 0 for a non-terminating series");
  if (is_exact(a)) throw DomainError("gauss_sum_rhs: non-terminating case needs float mode");
  const double ca = to_double(c), aa = to_double(a), bb = to_double(b);
  const double v = detail::gamma_checked(ca) * detail::gamma_checked(ca - aa - bb) /
                   (detail::gamma_checked(ca - aa) * detail::gamma_checked(ca - bb));
  return from_double(v, a);
}

// ---------------------------------------------------------------------------
// Kampe de Feriet series of the integral I_{n,m}.

enum class KampeForm {
  standard,   // series in (1-x)/2-type arguments; lower row (alpha+1, rho+1)
  reflected,  // the alternative series obtained from P_n^{(a,b)}(-x) = (-1)^n P_n^{(b,a)}(x)
};

template <Field T>
struct KampeSpec {
  int n = 0;
  int m = 0;
  T alpha, beta, rho, delta;
  T mu, nu;
  T x, y;
  KampeForm form = KampeForm::standard;
};

struct ParameterShift {
  int dn = 0, dm = 0, dalpha = 0, dbeta = 0, drho = 0, ddelta = 0, dmu = 0, dnu = 0;
};

template <Field T>
KampeSpec<T> apply_shift(KampeSpec<T> s, const ParameterShift& d) {
  s.n += d.dn;
  s.m += d.dm;
  s.alpha += d.dalpha;
  s.beta += d.dbeta;
  s.rho += d.drho;
  s.delta += d.ddelta;
  s.mu += d.dmu;
  s.nu += d.dnu;
  return s;
}

// Regime of a single series: n, m >= 0; mu, nu > -1; the lower parameters of the
// form's series exceed 0 (alpha, rho > -1 standard; beta, delta > -1 reflected).
template <Field T>
bool kampe_valid(const KampeSpec<T>& s) {
  const T m1 = lift(-1, s.mu);
  if (s.n < 0 || s.m < 0 || !(s.mu > m1) || !(s.nu > m1)) return false;
  if (s.form == KampeForm::standard) return s.alpha > m1 && s.rho > m1;
  return s.beta > m1 && s.delta > m1;
}

namespace detail {

// a_k = (-n)_k (n+p+q+1)_k / ((low)_k k!), k = 0..n
template <Field T>
std::vector<T> kampe_side(int n, const T& p, const T& q, const T& low) {
  std::vector<T> a;
  a.reserve(n + 1);
  a.push_back(lift(1, p));
  for (int k = 0; k < n; ++k) {
    const T den = (low + k) * (k + 1);
    if (is_zero(den)) throw PoleError("kampe: lower parameter reaches a pole before termination");
    a.push_back(a.back() * (k - n) * (p + q + (n + 1 + k)) / den);
  }
  return a;
}

enum class Weighting { none, k, l };

template <Field T>
T kampe_sum(const KampeSpec<T>& s, Weighting w) {
  if (!kampe_valid(s)) throw DomainError("kampe: spec outside the series regime");
  const bool std_form = s.form == KampeForm::standard;
  const T one = lift(1, s.mu);
  const T nfact = factorial(s.n, one), mfact = factorial(s.m, one);
  T pre = pow2(s.mu + s.nu + 1) * beta_function(s.nu + 1, s.mu + 1) / (nfact * mfact);
  std::vector<T> A, B;
  if (std_form) {
    pre *= pochhammer(s.alpha + 1, s.n) * pochhammer(s.rho + 1, s.m);
    A = kampe_side(s.n, s.alpha, s.beta, s.alpha + 1);
    B = kampe_side(s.m, s.rho, s.delta, s.rho + 1);
  } else {
    pre *= pochhammer(s.beta + 1, s.n) * pochhammer(s.delta + 1, s.m);
    if ((s.n + s.m) % 2 != 0) pre = -pre;
    A = kampe_side(s.n, s.alpha, s.beta, s.beta + 1);
    B = kampe_side(s.m, s.rho, s.delta, s.delta + 1);
  }
  // C_j = (top)_j / (mu+nu+2)_j with top = mu+1 (standard) or nu+1 (reflected)
  const T top = std_form ? s.mu + 1 : s.nu + 1;
  std::vector<T> C{one};
  for (int j = 0; j < s.n + s.m; ++j) C.push_back(C.back() * (top + j) / (s.mu + s.nu + (2 + j)));
  T xk = one;
  T sum = lift(0, s.mu);
  for (int k = 0; k <= s.n; ++k) {
    T inner = lift(0, s.mu);
    T yl = one;
    for (int l = 0; l <= s.m; ++l) {
      T term = C[k + l] * B[l] * yl;
      if (w == Weighting::l) term *= l;
      inner += term;
      yl *= s.y;
    }
    T row = A[k] * xk * inner;
    if (w == Weighting::k) row *= k;
    sum += row;
    xk *= s.x;
  }
  return pre * sum;
}

}  // namespace detail

// Prefactored Kampe de Feriet series F; at x = y = 1 and standard form it equals the
// unscaled integral of (1-x)^mu (1+x)^nu P_n^{(alpha,beta)} P_m^{(rho,delta)}.
template <Field T>
T kampe_eval(const KampeSpec<T>& spec) {
  return detail::kampe_sum(spec, detail::Weighting::none);
}

template <Field T>
T kampe_shifted(const KampeSpec<T>& spec, const ParameterShift& shift) {
  const KampeSpec<T> s = apply_shift(spec, shift);
  if (!kampe_valid(s)) throw DomainError("kampe_shifted: shifted spec outside the series regime");
  return kampe_eval(s);
}

enum class Axis { x, y };

// Euler operator theta = x d/dx (or y d/dy) applied termwise.
template <Field T>
T euler_theta(const KampeSpec<T>& spec, Axis axis) {
  return detail::kampe_sum(spec, axis == Axis::x ? detail::Weighting::k : detail::Weighting::l);
}

}  // namespace jacrec
