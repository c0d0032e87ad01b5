// Acceptance criteria 1-8: one PASS/FAIL line each; exit status 1 if any criterion fails.
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "jacrec/bench.hpp"
#include "jacrec/certify.hpp"
#include "jacrec/fem2d.hpp"

using namespace jacrec;
using R = Rational;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  std::printf("criterion %d: %s - %s (%s)\n", id, pass ? "PASS" : "FAIL", what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

template <class Fn>
void parallel_for(int count, Fn fn) {
  const int workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int k = next++; k < count; k = next++) fn(k);
    });
  for (auto& t : pool) t.join();
}

void criterion1() {
  const auto t0 = Clock::now();
  const auto reports = certify_relations(200, 20240601);
  const double secs = since(t0);
  const std::set<std::string> required = {
      "Rec2", "Rec3", "Rec4", "Rec5", "Rec4_2", "basicrec", "munu", "MixedRec1", "MixedRec2", "MixedRec3", "MixedRec4",
      "Mixed1", "Mixed2", "Mixed5Point", "Mixed5Point2", "Mixed5Point3", "recnu", "recmu", "HardRec", "folg4p13",
      "EasyRec", "dx1", "dx2", "dy1", "dy2", "dxdy", "dx3", "dx4", "dy3", "dy4", "dxdy2"};
  std::set<std::string> seen;
  bool ok = true;
  long specs = 0;
  std::string first;
  for (const auto& r : reports) {
    seen.insert(r.name);
    specs += r.cases;
    ok = ok && r.ok() && r.cases >= 200;
    if (!r.ok() && first.empty()) first = "; first failure: " + r.first_failure;
  }
  for (const auto& id : required) ok = ok && seen.count(id);
  report(1, ok && secs <= 60, "relation catalog residuals vanish exactly",
         std::to_string(reports.size()) + " relations incl. all " + std::to_string(required.size()) + " required, " +
             std::to_string(specs) + " specs, " + fmt("%.1f s", secs) + first);
}

void criterion2() {
  const auto t0 = Clock::now();
  const int N = 40;
  std::atomic<long> exact_entries{0}, mismatches{0};
  std::mutex mu_worst;
  double worst = 0;
  // family index: kind x mu x alpha x rho
  parallel_for(2 * 13 * 10 * 10, [&](int f) {
    const bool integrated = f % 2 == 1;
    const int mu = (f / 2) % 13, a = (f / 26) % 10, r = f / 260;
    const auto kind = integrated ? IntegralKind::integrated : IntegralKind::plain;
    const auto fam = integrated ? integrated_spec(1, 1, R(a), R(r), R(mu)) : plain_spec(0, 0, R(a), R(r), R(mu));
    const auto oracle = integral_direct_batch(fam, N, N);
    const auto exact = integrated ? fill_recint(R(mu), R(a), R(r), N, N) : fill_recint2(R(mu), R(a), R(r), N, N);
    const auto flt = integrated ? fill_recint(double(mu), double(a), double(r), N, N)
                                : fill_recint2(double(mu), double(a), double(r), N, N);
    const auto q = integral_quad_grid(IntegralSpec<double>{0, 0, double(a), 0.0, double(r), 0.0, double(mu), 0.0, kind},
                                      N, N);
    const int n0 = exact.n0();
    long bad = 0, count = 0;
    double scale = 0, dev = 0;
    for (int n = n0; n <= N; ++n)
      for (int m = n0; m <= N; ++m) {
        bad += !(exact.at(n, m) == oracle[n * (N + 1) + m]);
        ++count;
        scale = std::max(scale, std::abs(q[n * (N + 1) + m]));
        dev = std::max(dev, std::abs(flt.at(n, m) - q[n * (N + 1) + m]));
      }
    // the batched oracle is the same double sum; tie a few entries to the per-entry form
    for (auto [n, m] : {std::pair{N, N}, std::pair{N, n0 + 1}, std::pair{N / 2, N / 3}}) {
      auto s = fam;
      s.n = n;
      s.m = m;
      bad += !(exact.at(n, m) == integral_direct(s));
      ++count;
    }
    exact_entries += count;
    mismatches += bad;
    const std::lock_guard lock(mu_worst);
    worst = std::max(worst, dev / scale);
  });
  const double secs = since(t0);
  report(2, mismatches == 0 && worst <= 1e-12 && secs <= 120,
         "oracle triangle: tables equal the direct sum exactly and quadrature in float",
         "2600 tables, " + std::to_string(exact_entries.load()) + " exact comparisons, " +
             std::to_string(mismatches.load()) + " mismatches, " +
             fmt("max float deviation %.2e relative to table max, %.1f s", worst, secs));
}

void criterion3() {
  const auto t = fill_easy(R(0), 30);
  long bad = 0;
  for (int n = 0; n <= 30; ++n)
    for (int m = 0; m <= 30; ++m) bad += !(t.at(n, m) == (n == m ? R(2, 2 * n + 1) : R(0)));
  report(3, bad == 0, "fill_easy(alpha=0) gives 2 delta_nm/(2n+1) exactly for n, m <= 30",
         std::to_string(bad) + " of 961 entries differ");
}

void criterion4() {
  const int p = 20;
  const auto fns = basis_functions(p);
  const auto q = assemble_mass_quadrature(p, Triangle::reference());
  const auto r = assemble_mass_recursive(p, Triangle::reference());
  double mx = 0;
  for (const auto& e : q.entries)
    if (fns[e.row].kind == BasisKind::interior && fns[e.col].kind == BasisKind::interior) mx = std::max(mx, std::abs(e.value));
  double off = 0;
  long emitted = 0, literal_lost = 0;
  for (const auto& e : q.entries) {
    const auto& a = fns[e.row];
    const auto& b = fns[e.col];
    if (a.kind != BasisKind::interior || b.kind != BasisKind::interior) continue;
    if (!interior_pattern(a.i, a.j, b.i, b.j)) off = std::max(off, std::abs(e.value));
    const int d = std::abs(a.i - b.i);
    const bool literal = std::abs(a.i + b.i - a.j - b.j) <= 4 && (d == 0 || d == 2);
    if (!literal && std::abs(e.value) > 1e-12 * mx) ++literal_lost;
  }
  for (const auto& e : r.entries) {
    const auto& a = fns[e.row];
    const auto& b = fns[e.col];
    if (a.kind == BasisKind::interior && b.kind == BasisKind::interior && !interior_pattern(a.i, a.j, b.i, b.j)) ++emitted;
  }
  report(4, off <= 1e-12 * mx && emitted == 0, "interior sparsity pattern |i+j-k-l| <= 4, |i-k| in {0,2} at p = 20",
         fmt("largest off-pattern quadrature entry %.2e of max, ", off / mx) + std::to_string(emitted) +
             " off-pattern entries emitted");
  std::printf("  info: the literal reading |i+k-j-l| <= 4 would discard %ld interior entries above 1e-12*max\n", literal_lost);
}

void criterion5() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-2, 2);
  Triangle random_tri;
  do {
    for (auto& v : random_tri.v) v = {u(rng), u(rng)};
  } while (random_tri.area() < 0.5);
  double worst = 0, worst_entry = 0;
  for (int p : {4, 8, 16})
    for (const auto& tri : {Triangle::reference(), random_tri}) {
      const auto r = assemble_mass_recursive(p, tri);
      const auto q = assemble_mass_quadrature(p, tri);
      const double scale = q.max_abs();
      for (const auto& e : q.entries) {
        const double d = std::abs(r.at(e.row, e.col) - e.value);
        worst = std::max(worst, d / scale);
        if (std::abs(e.value) > 1e-6 * scale) worst_entry = std::max(worst_entry, d / std::abs(e.value));
      }
      for (const auto& e : r.entries) worst = std::max(worst, std::abs(e.value - q.at(e.row, e.col)) / scale);
    }
  report(5, worst <= 1e-10, "recursive and quadrature mass matrices agree for p in {4, 8, 16}, reference + random triangle",
         fmt("max deviation %.2e relative to max|M|; entrywise %.2e on entries above 1e-6*max", worst, worst_entry));
}

void criterion6() {
  double worst = 0;
  for (auto kind : {IntegralKind::plain, IntegralKind::integrated})
    for (auto [i, j] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 3}}) {
      const auto t = fill_triple(kind, i, j, 4, 15, 15, 0.0);
      for (int a = 0; a <= 4; ++a) {
        const auto q = integral_quad_grid(t.pair_spec(t.n0(), t.n0()), 15, 15, a);
        double scale = 0, dev = 0;
        for (int n = t.n0(); n <= 15; ++n)
          for (int m = t.n0(); m <= 15; ++m) {
            scale = std::max(scale, std::abs(q[n * 16 + m]));
            dev = std::max(dev, std::abs(t.at(a, n, m) - q[n * 16 + m]));
          }
        worst = std::max(worst, dev / scale);
      }
    }
  long bad = 0;
  for (auto kind : {IntegralKind::plain, IntegralKind::integrated})
    for (long i = 0; i <= 6; ++i)
      for (long j = 0; j <= 6; ++j)
        for (long n = 1; n <= 20; ++n)
          for (long m = 1; m <= 20; ++m) {
            const auto c = triple_coefficients(kind, i, j, 0, n, m);
            const R mu(i + j + 1), a(2 * i), r(2 * j);
            const auto s = kind == IntegralKind::plain ? recint2_stencil(mu, a, r, n, m) : recint_stencil(mu, a, r, n, m);
            bad += !(R(c[0]) == s.lead && R(c[2]) == s.c11 && R(c[4]) == s.c10 && R(c[6]) == s.c01);
          }
  report(6, worst <= 1e-12 && bad == 0, "three-index tables match quadrature; a = 0 coefficients reduce to the two-index recursions",
         fmt("max deviation %.2e relative to layer max over both kinds, ", worst) + std::to_string(bad) +
             " coefficient mismatches");
}

void criterion7(Clock::time_point start) {
  std::vector<double> rec, rec_amortized;
  for (int p : {40, 80, 160}) {
    rec.push_back(time_gram(GramParams{p}, GramMethod::recursive, 7, false, 0.05).per_entry_time);
    rec_amortized.push_back(time_gram(GramParams{p}, GramMethod::recursive, 7, true, 0.05).per_entry_time);
  }
  const double q32 = time_gram(GramParams{32}, GramMethod::quadrature, 7, false, 0.05).per_entry_time;
  const double q128 = time_gram(GramParams{128}, GramMethod::quadrature, 7, false, 0.05).per_entry_time;
  auto ratio = [](const std::vector<double>& v) {
    return *std::max_element(v.begin(), v.end()) / *std::min_element(v.begin(), v.end());
  };
  const double total = since(start);
  report(7, ratio(rec) <= 2 && q128 / q32 >= 2 && total <= 600, "per-entry cost: flat for recursion, growing for quadrature",
         fmt("recursive max/min %.2f over p = 40, 80, 160 (seeds included; %.2f amortized), ", ratio(rec), ratio(rec_amortized)) +
             fmt("quadrature p=128 / p=32 = %.2f, suite wall %.1f s", q128 / q32, total));
}

void criterion8() {
  const auto reports = certify_summations(100, 12, 8080);
  bool ok = true;
  std::string detail;
  for (const auto& r : reports) {
    ok = ok && r.ok();
    detail += r.name + " " + std::to_string(r.cases) + " cases" + (r.ok() ? "" : " FAILED: " + r.first_failure) + "; ";
  }
  report(8, ok, "summation closed forms equal brute-force terminating sums exactly, m <= 12, 100 parameter sets",
         detail + "Chu-Vandermonde and Pfaff-Saalschutz use the corrected right-hand sides");
}

}  // namespace

int main() {
  const auto start = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion8();
  criterion7(start);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
