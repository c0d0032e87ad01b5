#include "jacrec/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

namespace jacrec {

std::optional<Band> gram_band(const GramParams& g) {
  const Rational gap = Rational(g.weight_exp) - g.alpha;
  if (!gap.is_integer() || gap.sign() < 0) return std::nullopt;
  const int w = static_cast<int>(gap.mpq().get_num().get_si());
  return Band{-w, w};
}

RecurrenceTable<double> gram_recursive(const GramParams& g, FillStats* stats) {
  const double a = g.alpha.to_double();
  return fill_recint2(double(g.weight_exp), a, a, g.pmax, g.pmax, gram_band(g), stats);
}

RecurrenceTable<Rational> gram_recursive_exact(const GramParams& g) {
  return fill_recint2(Rational(g.weight_exp), g.alpha, g.alpha, g.pmax, g.pmax, gram_band(g));
}

std::vector<double> gram_quadrature(const GramParams& g) {
  const double a = g.alpha.to_double();
  return integral_quad_grid(plain_spec(0, 0, a, a, double(g.weight_exp)), g.pmax, g.pmax);
}

BenchRecord time_gram(const GramParams& g, GramMethod method, int repeats, bool amortized, double min_seconds) {
  using Clock = std::chrono::steady_clock;
  BenchRecord rec;
  rec.method = method == GramMethod::recursive ? "recursive" : "quadrature";
  rec.pmax = g.pmax;
  rec.amortized = amortized;
  rec.nnz = method == GramMethod::recursive ? gram_recursive(g).stored_count()
                                            : static_cast<std::size_t>(g.pmax + 1) * (g.pmax + 1);
  std::vector<double> runs, seeds;
  volatile double sink = 0;
  // warm-up (quadrature rule cache, allocator)
  sink = method == GramMethod::recursive ? gram_recursive(g).at(0, 0) : gram_quadrature(g).front();
  for (int r = 0; r < std::max(repeats, 1); ++r) {
    long iters = 0;
    double seed = 0, recurse = 0;
    const auto start = Clock::now();
    double elapsed = 0;
    do {
      if (method == GramMethod::recursive) {
        FillStats st;
        const auto t = gram_recursive(g, &st);
        sink = sink + t.at(g.pmax, g.pmax);
        seed += st.seed_seconds;
        recurse += st.recurse_seconds;
      } else {
        sink = sink + gram_quadrature(g).back();
      }
      ++iters;
      elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    } while (elapsed < min_seconds || iters < 2);
    const double per_run = method == GramMethod::recursive ? (amortized ? recurse : seed + recurse) / iters : elapsed / iters;
    runs.push_back(per_run);
    seeds.push_back(seed / iters);
  }
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
  };
  rec.wall_time = median(runs);
  rec.seed_time = median(seeds);
  rec.per_entry_time = rec.wall_time / static_cast<double>(rec.nnz);
  return rec;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "method,pmax,wall_time,nnz,per_entry_time,seed_time,amortized\n";
  char buf[256];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%s,%d,%.17g,%zu,%.17g,%.17g,%d\n", r.method.c_str(), r.pmax, r.wall_time, r.nnz,
                  r.per_entry_time, r.seed_time, r.amortized ? 1 : 0);
    out << buf;
  }
}

}  // namespace jacrec
