#include <gmpxx.h>

#include <vector>

#include "jacrec/integrals.hpp"

namespace jacrec {
namespace {

// scale * sum_l coeffs[l] t^l with t = (1-x)/2 and integer coefficients.
struct TPolynomial {
  std::vector<mpz_class> coeffs;
  mpq_class scale = 1;
};

TPolynomial from_rational(const std::vector<mpq_class>& c, mpq_class scale) {
  mpz_class den = 1;
  for (const auto& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  TPolynomial p;
  for (const auto& v : c) p.coeffs.push_back(v.get_num() * (den / v.get_den()));
  p.scale = scale / den;
  p.scale.canonicalize();
  return p;
}

// P_n^{(a,b)}(x) = sum_l (a+l+1)_{n-l}/(n-l)! * (n+a+b+1)_l/l! * (-t)^l
TPolynomial jacobi_tpoly(int n, const mpq_class& a, const mpq_class& b) {
  std::vector<mpq_class> c(n + 1);
  for (int l = 0; l <= n; ++l) {
    mpq_class v = 1;
    for (int k = 0; k < n - l; ++k) v *= (a + l + 1 + k) / mpq_class(k + 1);
    for (int k = 0; k < l; ++k) v *= (a + b + n + 1 + k) / mpq_class(k + 1);
    if (l % 2 != 0) v = -v;
    v.canonicalize();
    c[l] = v;
  }
  return from_rational(c, 1);
}

// Multiply by (1-x)^e_mu (1+x)^e_nu = 2^{e_mu+e_nu} t^e_mu (1-t)^e_nu.
TPolynomial apply_factors(TPolynomial p, int e_mu, int e_nu) {
  for (int k = 0; k < e_nu; ++k) {
    std::vector<mpz_class> q(p.coeffs.size() + 1, 0);
    for (std::size_t l = 0; l < p.coeffs.size(); ++l) {
      q[l] += p.coeffs[l];
      q[l + 1] -= p.coeffs[l];
    }
    p.coeffs = std::move(q);
  }
  p.coeffs.insert(p.coeffs.begin(), e_mu, mpz_class(0));
  p.scale *= mpq_class(mpz_class(1) << (e_mu + e_nu));
  return p;
}

TPolynomial multiply(const TPolynomial& a, const TPolynomial& b) {
  TPolynomial p;
  p.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) p.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  p.scale = a.scale * b.scale;
  return p;
}

TPolynomial family_tpoly(IntegralKind kind, int n, const Rational& alpha, const Rational& beta) {
  if (kind == IntegralKind::plain) return jacobi_tpoly(n, alpha.mpq(), beta.mpq());
  const auto r = detail::rewrite_integrated(n, alpha);
  TPolynomial p = jacobi_tpoly(r.deg, r.a.mpq(), r.b.mpq());
  p.scale *= r.scale.mpq();
  return apply_factors(std::move(p), r.e_mu, r.e_nu);
}

long integer_or_throw(const Rational& v, const char* what) {
  if (!v.is_integer() || v.sign() < 0) throw UnsupportedError(what);
  return v.mpq().get_num().get_si();
}

// D * 2 B(mu+s+1, nu+1) for s < count, with D a common denominator.
struct Moments {
  std::vector<mpz_class> w;
  mpz_class den;
};

Moments weight_moments(long mu, long nu, int count) {
  std::vector<mpq_class> q(count);
  mpz_class den = 1;
  for (int s = 0; s < count; ++s) {
    // 2 B(a, nu+1) = 2 nu! / (a (a+1) ... (a+nu)), a = mu+s+1
    mpz_class num = 2, d = 1;
    for (long k = 1; k <= nu; ++k) num *= k;
    for (long k = 0; k <= nu; ++k) d *= mu + s + 1 + k;
    q[s] = mpq_class(num, d);
    q[s].canonicalize();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q[s].get_den_mpz_t());
  }
  Moments m{{}, den};
  for (const auto& v : q) m.w.push_back(v.get_num() * (den / v.get_den()));
  return m;
}

}  // namespace

std::vector<Rational> integral_direct_batch(const IntegralSpec<Rational>& family, int nmax, int mmax,
                                            int legendre_degree) {
  const long mu = integer_or_throw(family.mu, "integral_direct_batch: needs integer mu >= 0");
  const long nu = integer_or_throw(family.nu, "integral_direct_batch: needs integer nu >= 0");
  const int n0 = family.kind == IntegralKind::plain ? 0 : 1;
  std::vector<TPolynomial> F, G;
  for (int n = 0; n <= nmax; ++n) {
    TPolynomial f = n < n0 ? TPolynomial{{0}, 1} : family_tpoly(family.kind, n, family.alpha, family.beta);
    if (legendre_degree >= 0) f = multiply(f, jacobi_tpoly(legendre_degree, 0, 0));
    F.push_back(std::move(f));
  }
  for (int m = 0; m <= mmax; ++m)
    G.push_back(m < n0 ? TPolynomial{{0}, 1} : family_tpoly(family.kind, m, family.rho, family.delta));
  std::size_t flen = 0, glen = 0;
  for (const auto& f : F) flen = std::max(flen, f.coeffs.size());
  for (const auto& g : G) glen = std::max(glen, g.coeffs.size());
  const Moments W = weight_moments(mu, nu, static_cast<int>(flen + glen));
  std::vector<Rational> out(static_cast<std::size_t>(nmax + 1) * (mmax + 1));
  std::vector<mpz_class> d(flen);
  mpz_class acc;
  for (int m = n0; m <= mmax; ++m) {
    const auto& g = G[m].coeffs;
    for (std::size_t l = 0; l < flen; ++l) {
      d[l] = 0;
      for (std::size_t r = 0; r < g.size(); ++r) d[l] += g[r] * W.w[l + r];
    }
    for (int n = n0; n <= nmax; ++n) {
      const auto& f = F[n].coeffs;
      acc = 0;
      for (std::size_t l = 0; l < f.size(); ++l) acc += f[l] * d[l];
      mpq_class v(acc, W.den);
      v.canonicalize();
      v *= F[n].scale * G[m].scale;
      out[static_cast<std::size_t>(n) * (mmax + 1) + m] = Rational(std::move(v));
    }
  }
  return out;
}

Rational legendre_weighted_exact(const IntegralSpec<Rational>& spec, int legendre_degree) {
  detail::check_integral_spec(spec);
  const auto table = integral_direct_batch(spec, spec.n, spec.m, legendre_degree);
  return table.back();
}

}  // namespace jacrec
