#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "jacrec/hyper.hpp"
#include "jacrec/jacobi.hpp"
#include "jacrec/relations.hpp"

namespace jacrec {

enum class IntegralKind { plain, integrated };

// I = int_{-1}^{1} ((1-x)/2)^mu ((1+x)/2)^nu f_n(x) g_m(x) dx with f_n = P_n^{(alpha,beta)},
// g_m = P_m^{(rho,delta)} (plain) or the integrated Jacobi polynomials p_n^{(alpha,0)},
// p_m^{(rho,0)} (integrated; beta, delta ignored, n, m >= 1).
template <Field T>
struct IntegralSpec {
  int n = 0;
  int m = 0;
  T alpha, beta, rho, delta;
  T mu, nu;
  IntegralKind kind = IntegralKind::plain;
};

template <Field T>
IntegralSpec<T> plain_spec(int n, int m, const T& alpha, const T& rho, const T& mu) {
  const T zero = lift(0, mu);
  return {n, m, alpha, zero, rho, zero, mu, zero, IntegralKind::plain};
}

template <Field T>
IntegralSpec<T> integrated_spec(int n, int m, const T& alpha, const T& rho, const T& mu) {
  const T zero = lift(0, mu);
  return {n, m, alpha, zero, rho, zero, mu, zero, IntegralKind::integrated};
}

namespace detail {

template <Field T>
void check_integral_spec(const IntegralSpec<T>& s) {
  const T m1 = lift(-1, s.mu);
  if (s.n < 0 || s.m < 0) throw DomainError("integral: negative degree");
  if (!(s.mu > m1) || !(s.nu > m1)) throw DomainError("integral: weight exponents must exceed -1");
  if (s.kind == IntegralKind::plain) {
    if (!(s.alpha > m1) || !(s.rho > m1)) throw DomainError("integral: alpha, rho must exceed -1");
    if (s.alpha + s.beta + s.n < lift(0, s.mu) || s.rho + s.delta + s.m < lift(0, s.mu))
      throw DomainError("integral: requires n+alpha+beta >= 0 and m+rho+delta >= 0");
  } else {
    if (s.n < 1 || s.m < 1) throw DomainError("integral: integrated kind needs n, m >= 1");
    if (s.alpha < lift(0, s.mu) || s.rho < lift(0, s.mu)) throw DomainError("integral: integrated kind needs alpha, rho >= 0");
  }
}

// p_n^{(alpha,0)} = scale (1-x)^e_mu (1+x)^e_nu P_{deg}^{(a,b)}.
template <Field T>
struct JacobiRewrite {
  T scale;
  int e_mu = 0;
  int e_nu = 0;
  int deg = 0;
  T a, b;
};

template <Field T>
JacobiRewrite<T> rewrite_integrated(int n, const T& alpha) {
  const T one = lift(1, alpha);
  if (n == 1) return {one, 0, 1, 0, alpha, lift(0, alpha)};
  if (is_zero(alpha)) return {lift_ratio(-1, 2 * (n - 1), alpha), 1, 1, n - 2, one, one};
  return {lift_ratio(1, n, alpha), 0, 1, n - 1, alpha - 1, one};
}

template <Field T>
T integral_direct_plain(int n, int m, const T& alpha, const T& beta, const T& rho, const T& delta, const T& mu,
                        const T& nu) {
  const T one = lift(1, mu);
  const std::vector<T> A = kampe_side(n, alpha, beta, alpha + 1);
  const std::vector<T> B = kampe_side(m, rho, delta, rho + 1);
  std::vector<T> C{one};  // (mu+1)_s / (mu+nu+2)_s
  for (int s = 0; s < n + m; ++s) C.push_back(C.back() * (mu + (s + 1)) / (mu + nu + (s + 2)));
  T sum = lift(0, mu);
  for (int l = 0; l <= n; ++l) {
    T inner = lift(0, mu);
    for (int r = 0; r <= m; ++r) inner += B[r] * C[l + r];
    sum += A[l] * inner;
  }
  const T pre = 2 * beta_function(mu + 1, nu + 1) * pochhammer(alpha + 1, n) * pochhammer(rho + 1, m) /
                (factorial(n, one) * factorial(m, one));
  return pre * sum;
}

}  // namespace detail

// Direct double-sum evaluation (hypergeometric form of the integral, converted to the
// canonical scaled weight). Exact in exact modes for integer mu, nu and rational parameters.
template <Field T>
T integral_direct(const IntegralSpec<T>& s) {
  detail::check_integral_spec(s);
  if (s.kind == IntegralKind::plain)
    return detail::integral_direct_plain(s.n, s.m, s.alpha, s.beta, s.rho, s.delta, s.mu, s.nu);
  const auto f = detail::rewrite_integrated(s.n, s.alpha);
  const auto g = detail::rewrite_integrated(s.m, s.rho);
  // (1-x)^e = 2^e ((1-x)/2)^e moves into the scaled weight
  const int e_mu = f.e_mu + g.e_mu;
  const int e_nu = f.e_nu + g.e_nu;
  return f.scale * g.scale * pow2(e_mu + e_nu, s.mu) *
         detail::integral_direct_plain(f.deg, g.deg, f.a, f.b, g.a, g.b, s.mu + e_mu, s.nu + e_nu);
}

namespace detail {

inline double ipow(double b, long e) {
  double r = 1;
  for (; e > 0; e >>= 1, b *= b)
    if (e & 1) r *= b;
  return r;
}

inline double weight_value(double x, long mu, long nu) { return ipow((1 - x) / 2, mu) * ipow((1 + x) / 2, nu); }

template <Field T>
std::pair<long, long> integer_weights(const IntegralSpec<T>& s) {
  const auto mu = as_integer(s.mu);
  const auto nu = as_integer(s.nu);
  if (!mu || !nu || *mu < 0 || *nu < 0) throw UnsupportedError("quadrature needs integer mu, nu >= 0; use integral_direct");
  return {*mu, *nu};
}

}  // namespace detail

// Degree-exact Gauss-Legendre value in binary64. `legendre_degree` >= 0 multiplies the
// integrand by the Legendre polynomial L_a.
template <Field T>
double integral_quad(const IntegralSpec<T>& s, int legendre_degree = -1) {
  detail::check_integral_spec(s);
  const auto [mu, nu] = detail::integer_weights(s);
  const int deg = s.n + s.m + static_cast<int>(mu + nu) + std::max(legendre_degree, 0);
  const QuadratureRule& rule = gauss_legendre((deg + 3) / 2);
  const double a = to_double(s.alpha), b = to_double(s.beta), r = to_double(s.rho), d = to_double(s.delta);
  double sum = 0;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double x = rule.nodes[q];
    double v = detail::weight_value(x, mu, nu);
    if (s.kind == IntegralKind::plain) {
      v *= jacobi_eval(s.n, a, b, x) * jacobi_eval(s.m, r, d, x);
    } else {
      v *= integrated_jacobi(s.n, a, x) * integrated_jacobi(s.m, r, x);
    }
    if (legendre_degree >= 0) v *= jacobi_eval(legendre_degree, 0.0, 0.0, x);
    sum += rule.weights[q] * v;
  }
  if (!std::isfinite(sum)) throw EvaluationError("integral_quad: non-finite value");
  return sum;
}

// Quadrature values for all (n, m) in [n0, nmax] x [n0, mmax] of one family, row-major over
// the full (nmax+1) x (mmax+1) grid (entries below n0 are left at 0).
template <Field T>
std::vector<double> integral_quad_grid(const IntegralSpec<T>& family, int nmax, int mmax, int legendre_degree = -1) {
  const auto [mu, nu] = detail::integer_weights(family);
  const int n0 = family.kind == IntegralKind::plain ? 0 : 1;
  const int deg = nmax + mmax + static_cast<int>(mu + nu) + std::max(legendre_degree, 0);
  const QuadratureRule& rule = gauss_legendre((deg + 3) / 2);
  const double a = to_double(family.alpha), b = to_double(family.beta);
  const double r = to_double(family.rho), d = to_double(family.delta);
  const std::size_t k = rule.size();
  std::vector<double> F((nmax + 1) * k), G((mmax + 1) * k), W(k);
  for (std::size_t q = 0; q < k; ++q) {
    const double x = rule.nodes[q];
    W[q] = rule.weights[q] * detail::weight_value(x, mu, nu) *
           (legendre_degree >= 0 ? jacobi_eval(legendre_degree, 0.0, 0.0, x) : 1.0);
    if (family.kind == IntegralKind::plain) {
      const auto pf = jacobi_all(nmax, a, b, x);
      const auto pg = jacobi_all(mmax, r, d, x);
      for (int n = 0; n <= nmax; ++n) F[n * k + q] = pf[n];
      for (int m = 0; m <= mmax; ++m) G[m * k + q] = pg[m];
    } else {
      for (int n = 1; n <= nmax; ++n) F[n * k + q] = integrated_jacobi(n, a, x);
      for (int m = 1; m <= mmax; ++m) G[m * k + q] = integrated_jacobi(m, r, x);
    }
  }
  std::vector<double> out((nmax + 1) * (mmax + 1), 0.0);
  for (int n = n0; n <= nmax; ++n)
    for (int m = n0; m <= mmax; ++m) {
      double s = 0;
      for (std::size_t q = 0; q < k; ++q) s += W[q] * F[n * k + q] * G[m * k + q];
      out[n * (mmax + 1) + m] = s;
    }
  return out;
}

// The bare terminating series 4F3(-m, rho+m+1, 1, 1+mu-alpha; rho+1, n+2, 1+mu-alpha-n; 1).
// The constant relating it to the integral is not applied.
template <Field T>
T fourf3_value(int n, int m, const T& alpha, const T& rho, const T& mu) {
  if (is_integer_value(alpha) && mu > alpha) throw DomainError("fourf3_value: requires mu <= alpha or non-integer alpha");
  const T one = lift(1, mu);
  return pfq_terminating(PFQSpec<T>{{lift(-m, mu), rho + (m + 1), one, one + mu - alpha},
                                    {rho + 1, lift(n + 2, mu), one + mu - alpha - n},
                                    one});
}

// Seed oracle: exact direct sum in exact modes, quadrature for float with integer weights.
template <Field T>
T seed_value(const IntegralSpec<T>& s) {
  if (is_exact(s.mu)) return integral_direct(s);
  if (is_integer_value(s.mu) && is_integer_value(s.nu) && s.mu >= lift(0, s.mu) && s.nu >= lift(0, s.mu))
    return from_double(integral_quad(s), s.mu);
  return integral_direct(s);
}

// ---------------------------------------------------------------------------
// Recurrence tables.

enum class Provenance : std::uint8_t { seed, recursed };

// Diagonal band n - m in [lo, hi]; entries outside are structural zeros.
struct Band {
  int lo;
  int hi;
};

template <Field T>
class RecurrenceTable {
 public:
  RecurrenceTable(IntegralSpec<T> family, int nmax, int mmax, std::optional<Band> band = std::nullopt)
      : family_(std::move(family)),
        n0_(family_.kind == IntegralKind::plain ? 0 : 1),
        nmax_(nmax),
        mmax_(mmax),
        band_(band.value_or(Band{-mmax, nmax})),
        zero_(lift(0, family_.mu)) {
    if (nmax < n0_ || mmax < n0_) throw DomainError("RecurrenceTable: empty grid");
    offset_.assign(nmax_ + 2, 0);
    for (int n = 0; n <= nmax_; ++n) {
      const auto [lo, hi] = row_range(n);
      offset_[n + 1] = offset_[n] + (hi >= lo ? hi - lo + 1 : 0);
    }
    values_.assign(offset_.back(), zero_);
    provenance_.assign(offset_.back(), Provenance::seed);
  }

  const IntegralSpec<T>& family() const { return family_; }
  int n0() const { return n0_; }
  int nmax() const { return nmax_; }
  int mmax() const { return mmax_; }
  Band band() const { return band_; }
  std::size_t stored_count() const { return values_.size(); }

  bool in_grid(int n, int m) const { return n >= n0_ && m >= n0_ && n <= nmax_ && m <= mmax_; }
  bool stored(int n, int m) const { return in_grid(n, m) && n - m >= band_.lo && n - m <= band_.hi; }

  // Value at (n, m); structural zero outside the band.
  const T& at(int n, int m) const {
    if (!in_grid(n, m)) throw std::out_of_range("RecurrenceTable: index outside grid");
    return stored(n, m) ? values_[index(n, m)] : zero_;
  }
  Provenance provenance(int n, int m) const {
    if (!stored(n, m)) throw std::out_of_range("RecurrenceTable: no stored entry");
    return provenance_[index(n, m)];
  }
  void set(int n, int m, T v, Provenance p) {
    const std::size_t i = index(n, m);
    values_[i] = std::move(v);
    provenance_[i] = p;
  }
  // Stored m-range of row n.
  std::pair<int, int> row_range(int n) const {
    return {std::max(n0_, n - band_.hi), std::min(mmax_, n - band_.lo)};
  }

 private:
  std::size_t index(int n, int m) const { return offset_[n] + (m - row_range(n).first); }

  IntegralSpec<T> family_;
  int n0_, nmax_, mmax_;
  Band band_;
  T zero_;
  std::vector<std::size_t> offset_;
  std::vector<T> values_;
  std::vector<Provenance> provenance_;
};

// Stencil coefficients for I_{n,m}: lead * I_{n,m} = c11 I_{n-1,m-1} + c10 I_{n-1,m} + c01 I_{n,m-1}.
template <Field T>
struct Stencil {
  T lead, c11, c10, c01;
};

template <Field T>
Stencil<T> recint2_stencil(const T& mu, const T& alpha, const T& rho, int n, int m) {
  return {mu + (m + n + 1), alpha + rho - mu + (m + n - 1), alpha - mu + (n - m - 1), rho - mu + (m - n - 1)};
}

template <Field T>
Stencil<T> recint_stencil(const T& mu, const T& alpha, const T& rho, int n, int m) {
  return {mu + (m + n + 1), alpha + rho - mu + (m + n - 5), alpha - mu + (n - m - 3), rho - mu + (m - n - 3)};
}

// Equal-parameter form, written for the target (n, m) = (n'+1, m'+1).
template <Field T>
Stencil<T> easy_stencil(const T& alpha, int n, int m) {
  return {lift(n + m + 1, alpha), 2 * alpha + (n + m - 1), alpha + (n - m - 1), alpha + (m - n - 1)};
}

// Folded form (nu+1 = beta+delta) for the target (n, m) = (n'+1, m'+1).
template <Field T>
Stencil<T> folg_stencil(const IntegralSpec<T>& f, const T& nu, int n, int m) {
  const int a = n - 1, b = m - 1;
  return {lift((a + 1) * (b + 1), nu) * (f.mu + nu + (a + b + 4)),
          (f.beta + (a + 1)) * (f.delta + (b + 1)) * (f.alpha + f.rho - f.mu + (a + b + 1)),
          (f.beta + (a + 1)) * (b + 1) * (f.alpha + f.beta - f.mu - nu + (a - b - 2)),
          (f.delta + (b + 1)) * (a + 1) * (f.rho + f.delta - f.mu - nu + (b - a - 2))};
}

// Wall-clock split of a fill into seed evaluation and recursion.
struct FillStats {
  double seed_seconds = 0;
  double recurse_seconds = 0;
};

namespace detail {

template <Field T>
IntegralSpec<T> at_index(IntegralSpec<T> f, int n, int m) {
  f.n = n;
  f.m = m;
  return f;
}

// Seeds on row n0 and column n0 (inside the band), then the stencil row-major.
// Seed policy of seed_value for a list of (n, m) entries of one family; the float quadrature
// case shares one rule and one polynomial evaluation per node across all entries.
template <Field T>
std::vector<T> seed_values(const IntegralSpec<T>& family, const std::vector<std::pair<int, int>>& idx) {
  std::vector<T> out;
  const bool batched = !is_exact(family.mu) && is_integer_value(family.mu) && is_integer_value(family.nu) &&
                       family.mu >= lift(0, family.mu) && family.nu >= lift(0, family.mu);
  if (!batched) {
    for (const auto& [n, m] : idx) out.push_back(seed_value(at_index(family, n, m)));
    return out;
  }
  int nmax = 0, mmax = 0;
  for (const auto& [n, m] : idx) {
    check_integral_spec(at_index(family, n, m));
    nmax = std::max(nmax, n);
    mmax = std::max(mmax, m);
  }
  const auto [mu, nu] = integer_weights(family);
  const QuadratureRule& rule = gauss_legendre((nmax + mmax + static_cast<int>(mu + nu) + 3) / 2);
  const double a = to_double(family.alpha), b = to_double(family.beta);
  const double r = to_double(family.rho), d = to_double(family.delta);
  const bool plain = family.kind == IntegralKind::plain;
  std::vector<double> sums(idx.size(), 0.0), F(nmax + 1), G(mmax + 1);
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double x = rule.nodes[q];
    if (plain) {
      F = jacobi_all(nmax, a, b, x);
      G = jacobi_all(mmax, r, d, x);
    } else {
      for (int n = 1; n <= nmax; ++n) F[n] = integrated_jacobi(n, a, x);
      for (int m = 1; m <= mmax; ++m) G[m] = integrated_jacobi(m, r, x);
    }
    const double w = rule.weights[q] * weight_value(x, mu, nu);
    for (std::size_t k = 0; k < idx.size(); ++k) sums[k] += w * F[idx[k].first] * G[idx[k].second];
  }
  for (double v : sums) {
    if (!std::isfinite(v)) throw EvaluationError("seed quadrature: non-finite value");
    out.push_back(from_double(v, family.mu));
  }
  return out;
}

template <Field T, class StencilFn>
void fill_table(RecurrenceTable<T>& t, StencilFn stencil, FillStats* stats = nullptr) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  const int n0 = t.n0();
  std::vector<std::pair<int, int>> seeds;
  for (int m = n0; m <= t.mmax(); ++m)
    if (t.stored(n0, m)) seeds.emplace_back(n0, m);
  for (int n = n0 + 1; n <= t.nmax(); ++n)
    if (t.stored(n, n0)) seeds.emplace_back(n, n0);
  const auto values = seed_values(t.family(), seeds);
  for (std::size_t k = 0; k < seeds.size(); ++k) t.set(seeds[k].first, seeds[k].second, values[k], Provenance::seed);
  const auto t1 = Clock::now();
  for (int n = n0 + 1; n <= t.nmax(); ++n) {
    const auto [lo, hi] = t.row_range(n);
    for (int m = std::max(lo, n0 + 1); m <= hi; ++m) {
      const Stencil<T> c = stencil(n, m);
      if (is_zero(c.lead)) throw DomainError("recurrence: vanishing leading coefficient");
      T v = c.c11 * t.at(n - 1, m - 1) + c.c10 * t.at(n - 1, m) + c.c01 * t.at(n, m - 1);
      t.set(n, m, v / c.lead, Provenance::recursed);
    }
  }
  if (stats) {
    stats->seed_seconds = std::chrono::duration<double>(t1 - t0).count();
    stats->recurse_seconds = std::chrono::duration<double>(Clock::now() - t1).count();
  }
}

}  // namespace detail

// Plain weighted Legendre family: alpha = rho, mu = nu = beta = delta = 0.
template <Field T>
RecurrenceTable<T> fill_easy(const T& alpha, int nmax) {
  RecurrenceTable<T> t(plain_spec(0, 0, alpha, alpha, lift(0, alpha)), nmax, nmax);
  detail::fill_table(t, [&](int n, int m) { return easy_stencil(alpha, n, m); });
  return t;
}

// Plain family int ((1-x)/2)^mu P_n^{(alpha,0)} P_m^{(rho,0)}. A band may be given when the
// entries outside it are known to vanish (e.g. alpha = rho and mu - alpha a nonnegative integer).
template <Field T>
RecurrenceTable<T> fill_recint2(const T& mu, const T& alpha, const T& rho, int nmax, int mmax,
                                std::optional<Band> band = std::nullopt, FillStats* stats = nullptr) {
  if (mu < lift(0, mu)) throw DomainError("fill_recint2: mu must be nonnegative");
  RecurrenceTable<T> t(plain_spec(0, 0, alpha, rho, mu), nmax, mmax, band);
  detail::fill_table(t, [&](int n, int m) { return recint2_stencil(mu, alpha, rho, n, m); }, stats);
  return t;
}

// Integrated family int ((1-x)/2)^mu p_n^{(alpha,0)} p_m^{(rho,0)}, n, m >= 1.
template <Field T>
RecurrenceTable<T> fill_recint(const T& mu, const T& alpha, const T& rho, int nmax, int mmax,
                               std::optional<Band> band = std::nullopt) {
  if (mu < lift(0, mu)) throw DomainError("fill_recint: mu must be nonnegative");
  RecurrenceTable<T> t(integrated_spec(1, 1, alpha, rho, mu), nmax, mmax, band);
  detail::fill_table(t, [&](int n, int m) { return recint_stencil(mu, alpha, rho, n, m); });
  return t;
}

// Family with nu + 1 = beta + delta; the table holds the integrals with weight exponent nu + 1.
template <Field T>
RecurrenceTable<T> fill_folg4p13(const T& alpha, const T& beta, const T& rho, const T& delta, const T& mu,
                                 const T& nu, int nmax, int mmax) {
  if (!(nu + 1 == beta + delta)) throw DomainError("fill_folg4p13: requires nu + 1 = beta + delta");
  const T m1 = lift(-1, mu);
  if (!(alpha > m1) || !(rho > m1) || !(mu > m1) || !(nu > m1)) throw DomainError("fill_folg4p13: parameters outside regime");
  const IntegralSpec<T> family{0, 0, alpha, beta, rho, delta, mu, nu + 1, IntegralKind::plain};
  RecurrenceTable<T> t(family, nmax, mmax);
  detail::fill_table(t, [&](int n, int m) { return folg_stencil(family, nu, n, m); });
  return t;
}

// ---------------------------------------------------------------------------
// Three-index tables I_{a,n,m} = int ((1-x)/2)^{i+j+1} L_a f_n g_m with alpha = 2i, rho = 2j.

template <Field T>
struct TripleStencil {
  std::array<T, 8> c;  // lead, then predecessors in the order of triple_predecessors
};

// (da, dn, dm) offsets of the seven predecessors.
inline constexpr std::array<std::array<int, 3>, 7> triple_predecessors = {{
    {-1, -1, -1}, {0, -1, -1}, {-1, -1, 0}, {0, -1, 0}, {-1, 0, -1}, {0, 0, -1}, {-1, 0, 0}}};

// Integer coefficients of the seven-predecessor recursions.
std::array<long, 8> triple_coefficients(IntegralKind kind, long i, long j, long a, long n, long m);

template <Field T>
class TripleTable {
 public:
  TripleTable(IntegralKind kind, int i, int j, int amax, int nmax, int mmax, T zero)
      : kind_(kind), i_(i), j_(j), amax_(amax), nmax_(nmax), mmax_(mmax), zero_(zero),
        values_((amax + 1) * (nmax + 1) * (mmax + 1), zero),
        provenance_(values_.size(), Provenance::seed) {}

  IntegralKind kind() const { return kind_; }
  int i() const { return i_; }
  int j() const { return j_; }
  int amax() const { return amax_; }
  int nmax() const { return nmax_; }
  int mmax() const { return mmax_; }
  int n0() const { return kind_ == IntegralKind::plain ? 0 : 1; }

  // Layer a = -1 reads as zero.
  const T& at(int a, int n, int m) const {
    if (a == -1) return zero_;
    return values_.at(index(a, n, m));
  }
  Provenance provenance(int a, int n, int m) const { return provenance_.at(index(a, n, m)); }
  void set(int a, int n, int m, T v, Provenance p) {
    values_.at(index(a, n, m)) = std::move(v);
    provenance_.at(index(a, n, m)) = p;
  }
  // The spec of entry (n, m) without the Legendre factor.
  IntegralSpec<T> pair_spec(int n, int m) const {
    const T zero = zero_;
    return {n, m, lift(2 * i_, zero), zero, lift(2 * j_, zero), zero, lift(i_ + j_ + 1, zero), zero, kind_};
  }

 private:
  std::size_t index(int a, int n, int m) const {
    if (a < 0 || a > amax_ || n < 0 || n > nmax_ || m < 0 || m > mmax_) throw std::out_of_range("TripleTable index");
    return (static_cast<std::size_t>(a) * (nmax_ + 1) + n) * (mmax_ + 1) + m;
  }

  IntegralKind kind_;
  int i_, j_, amax_, nmax_, mmax_;
  T zero_;
  std::vector<T> values_;
  std::vector<Provenance> provenance_;
};

// Exact values of a whole (n, m) grid of one family via integer-coefficient polynomials in
// t = (1-x)/2 and exact weight moments; needs integer mu, nu >= 0. Optional L_a factor on f_n.
// Row-major over the full (nmax+1) x (mmax+1) grid; entries below n0 are 0.
std::vector<Rational> integral_direct_batch(const IntegralSpec<Rational>& family, int nmax, int mmax,
                                            int legendre_degree = -1);

// Exact value of a single Legendre-weighted entry.
Rational legendre_weighted_exact(const IntegralSpec<Rational>& spec, int legendre_degree);

template <Field T>
T legendre_weighted_seed(const IntegralSpec<T>& s, int a) {
  if constexpr (std::same_as<T, double>) {
    return integral_quad(s, a);
  } else if constexpr (std::same_as<T, Rational>) {
    return legendre_weighted_exact(s, a);
  } else {
    if (!s.mu.exact()) return Scalar(integral_quad(s, a));
    const IntegralSpec<Rational> r{s.n, s.m, s.alpha.rational(), s.beta.rational(), s.rho.rational(),
                                   s.delta.rational(), s.mu.rational(), s.nu.rational(), s.kind};
    return Scalar(legendre_weighted_exact(r, a));
  }
}

template <Field T>
TripleTable<T> fill_triple(IntegralKind kind, int i, int j, int amax, int nmax, int mmax, const T& like) {
  if (i < 0 || j < 0 || amax < 0) throw DomainError("fill_triple: negative index");
  const T zero = lift(0, like);
  TripleTable<T> t(kind, i, j, amax, nmax, mmax, zero);
  const int n0 = t.n0();
  const T mu = lift(i + j + 1, like), alpha = lift(2 * i, like), rho = lift(2 * j, like);
  // layer a = 0 from the matching two-index table (L_0 = 1)
  const RecurrenceTable<T> base = kind == IntegralKind::plain ? fill_recint2(mu, alpha, rho, nmax, mmax)
                                                              : fill_recint(mu, alpha, rho, nmax, mmax);
  for (int n = n0; n <= nmax; ++n)
    for (int m = n0; m <= mmax; ++m) t.set(0, n, m, base.at(n, m), base.provenance(n, m));
  for (int a = 1; a <= amax; ++a) {
    for (int m = n0; m <= mmax; ++m) t.set(a, n0, m, legendre_weighted_seed(t.pair_spec(n0, m), a), Provenance::seed);
    for (int n = n0 + 1; n <= nmax; ++n) t.set(a, n, n0, legendre_weighted_seed(t.pair_spec(n, n0), a), Provenance::seed);
    for (int n = n0 + 1; n <= nmax; ++n)
      for (int m = n0 + 1; m <= mmax; ++m) {
        const auto c = triple_coefficients(kind, i, j, a, n, m);
        if (c[0] == 0) throw DomainError("fill_triple: vanishing leading coefficient");
        T v = zero;
        for (std::size_t p = 0; p < triple_predecessors.size(); ++p) {
          const auto& d = triple_predecessors[p];
          if (c[p + 1] != 0) v += lift(c[p + 1], like) * t.at(a + d[0], n + d[1], m + d[2]);
        }
        t.set(a, n, m, v / lift(c[0], like), Provenance::recursed);
      }
  }
  return t;
}

// sum_a c_a I_{a,n,m}: the integral with a polynomial factor given by Legendre coefficients.
template <Field T>
T weighted_modal_integral(const std::vector<T>& coeffs, const TripleTable<T>& table, int n, int m) {
  if (coeffs.size() > static_cast<std::size_t>(table.amax() + 1))
    throw std::out_of_range("weighted_modal_integral: more coefficients than table layers");
  T s = table.at(0, n, m) * lift(0, table.at(0, n, m));
  for (std::size_t a = 0; a < coeffs.size(); ++a) s += coeffs[a] * table.at(static_cast<int>(a), n, m);
  return s;
}

// Residual of a catalog relation whose terms are plain values shifted only in (n, m), with the
// series values taken from a plain table at x = y = 1 (the common 2^{mu+nu} factor cancels).
template <Field T>
T table_relation_residual(const Relation<T>& rel, const RecurrenceTable<T>& t, int n, int m) {
  const IntegralSpec<T>& f = t.family();
  if (f.kind != IntegralKind::plain) throw UnsupportedError("table_relation_residual: plain tables only");
  KampeSpec<T> k;
  k.n = n;
  k.m = m;
  k.alpha = f.alpha;
  k.beta = f.beta;
  k.rho = f.rho;
  k.delta = f.delta;
  k.mu = f.mu;
  k.nu = f.nu;
  k.x = k.y = lift(1, f.mu);
  T sum = lift(0, f.mu);
  for (const auto& term : rel.terms) {
    const auto& d = term.shift;
    if (term.op != TermOp::value || d.dalpha != 0 || d.dbeta != 0 || d.drho != 0 || d.ddelta != 0 || d.dmu != 0 || d.dnu != 0)
      throw UnsupportedError("table_relation_residual: relation shifts more than (n, m)");
    const T c = term.coef(k);
    if (!is_zero(c)) sum += c * t.at(n + d.dn, m + d.dm);
  }
  return sum;
}

// CSV: header n,m,value[,provenance]; row-major over stored entries.
template <Field T>
void write_csv(std::ostream& out, const RecurrenceTable<T>& t, bool with_provenance) {
  out << (with_provenance ? "n,m,value,provenance\n" : "n,m,value\n");
  for (int n = t.n0(); n <= t.nmax(); ++n) {
    const auto [lo, hi] = t.row_range(n);
    for (int m = lo; m <= hi; ++m) {
      out << n << ',' << m << ',' << to_string(t.at(n, m));
      if (with_provenance) out << ',' << (t.provenance(n, m) == Provenance::seed ? "seed" : "recursed");
      out << '\n';
    }
  }
}

}  // namespace jacrec
