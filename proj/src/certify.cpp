#include "jacrec/certify.hpp"

#include <random>
#include <sstream>

#include "jacrec/integrals.hpp"
#include "jacrec/sampling.hpp"

namespace jacrec {
namespace {

std::string describe(const KampeSpec<Rational>& s) {
  std::ostringstream o;
  o << "n=" << s.n << " m=" << s.m << " alpha=" << s.alpha.str() << " beta=" << s.beta.str() << " rho=" << s.rho.str()
    << " delta=" << s.delta.str() << " mu=" << s.mu.str() << " nu=" << s.nu.str() << " x=" << s.x.str()
    << " y=" << s.y.str() << " form=" << (s.form == KampeForm::standard ? "standard" : "reflected");
  return o.str();
}

void record(SuiteReport& r, const Rational& residual, const std::string& where) {
  ++r.cases;
  const Rational a = abs(residual);
  if (a > r.max_abs_residual) r.max_abs_residual = a;
  if (!a.is_zero() && r.first_failure.empty()) r.first_failure = where + " residual=" + residual.str();
}

Rational random_rational(std::mt19937_64& rng, int span, int max_den) {
  std::uniform_int_distribution<int> den(1, max_den);
  const int d = den(rng);
  std::uniform_int_distribution<int> num(-span * d, span * d);
  return Rational(num(rng), d);
}

}  // namespace

std::vector<SuiteReport> certify_relations(int cases, std::uint64_t seed) {
  std::vector<SuiteReport> out;
  for (const auto& rel : relation_catalog<Rational>()) {
    SuiteReport r{rel.id};
    for (const auto& s : sample_relation_specs(rel, cases, seed)) record(r, relation_residual(rel, s), rel.id + " at " + describe(s));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SuiteReport> certify_identities(int cases, std::uint64_t seed) {
  static const Rational grid[] = {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(7, 2)};
  std::vector<SuiteReport> out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 5), deg(0, 12);
  for (IdentityId id : kAllIdentities) {
    SuiteReport r{std::string(identity_name(id))};
    while (r.cases < cases) {
      const int n = deg(rng);
      const Rational a = grid[pick(rng)], b = grid[pick(rng)];
      if (!identity_in_regime(id, n, a, b)) continue;
      const Rational x = random_rational(rng, 1, 12);
      record(r, identity_residual(id, n, a, b, x),
             r.name + " at n=" + std::to_string(n) + " alpha=" + a.str() + " beta=" + b.str() + " x=" + x.str());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SuiteReport> certify_summations(int cases, int mmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteReport gauss{"Gauss (terminating)"}, chu{"Chu-Vandermonde"}, pfaff{"Pfaff-Saalschutz"};
  int sets = 0;
  while (sets < cases) {
    const Rational a = random_rational(rng, 6, 7), b = random_rational(rng, 6, 7), c = random_rational(rng, 6, 7);
    // parameter sets whose lower parameters hit a pole for some m <= mmax are redrawn
    bool poles = false;
    for (int m = 0; m <= mmax && !poles; ++m)
      poles = pochhammer(c, m).is_zero() || pochhammer(c - a - b, m).is_zero() ||
              pochhammer(Rational(1) + a + b - c - m, m).is_zero();
    if (poles) continue;
    ++sets;
    const std::string where = " at a=" + a.str() + " b=" + b.str() + " c=" + c.str();
    for (int m = 0; m <= mmax; ++m) {
      const std::string at = where + " m=" + std::to_string(m);
      const Rational brute2 = pfq_terminating(PFQSpec<Rational>{{Rational(-m), b}, {c}, Rational(1)});
      record(gauss, gauss_sum_rhs(Rational(-m), b, c) - brute2, gauss.name + at);
      record(chu, chu_vandermonde_rhs(m, b, c) - brute2, chu.name + at);
      record(pfaff, pfaff_saalschutz_rhs(m, a, b, c) - pfq_terminating(pfaff_saalschutz_series(m, a, b, c)),
             pfaff.name + at);
    }
  }
  return {gauss, chu, pfaff};
}

std::vector<SuiteReport> certify_oracles(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> mu(0, 12), par(0, 9);
  SuiteReport plain{"fill_recint2 vs direct"}, integ{"fill_recint vs direct"}, easy{"fill_easy vs direct"};
  const int N = 12;
  for (int c = 0; c < cases; ++c) {
    const Rational m(mu(rng)), a(par(rng)), r(par(rng));
    const std::string fam = " family mu=" + m.str() + " alpha=" + a.str() + " rho=" + r.str();
    const auto t2 = fill_recint2(m, a, r, N, N);
    const auto o2 = integral_direct_batch(plain_spec(0, 0, a, r, m), N, N);
    const auto t1 = fill_recint(m, a, r, N, N);
    const auto o1 = integral_direct_batch(integrated_spec(1, 1, a, r, m), N, N);
    for (int n = 0; n <= N; ++n)
      for (int k = 0; k <= N; ++k) {
        const std::string at = fam + " n=" + std::to_string(n) + " m=" + std::to_string(k);
        record(plain, t2.at(n, k) - o2[n * (N + 1) + k], plain.name + at);
        if (n >= 1 && k >= 1) record(integ, t1.at(n, k) - o1[n * (N + 1) + k], integ.name + at);
      }
    // single-entry direct sums as a second, independent oracle
    std::uniform_int_distribution<int> idx(1, N);
    const int n = idx(rng), k = idx(rng);
    record(plain, t2.at(n, k) - integral_direct(plain_spec(n, k, a, r, m)), plain.name + fam);
    record(integ, t1.at(n, k) - integral_direct(integrated_spec(n, k, a, r, m)), integ.name + fam);
    const auto e = fill_easy(a, N);
    const auto oe = integral_direct_batch(plain_spec(0, 0, a, a, Rational(0)), N, N);
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= N; ++j) record(easy, e.at(i, j) - oe[i * (N + 1) + j], easy.name + fam);
  }
  return {plain, integ, easy};
}

}  // namespace jacrec
