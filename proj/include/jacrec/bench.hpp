#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "jacrec/integrals.hpp"

namespace jacrec {

// G_{i,j} = int ((1-x)/2)^w P_i^{(alpha,0)} P_j^{(alpha,0)} dx, 0 <= i, j <= pmax.
struct GramParams {
  int pmax = 10;
  int weight_exp = 8;
  Rational alpha{4};
};

enum class GramMethod { recursive, quadrature };

// Entries with |i - j| > w - alpha vanish when w - alpha is a nonnegative integer.
std::optional<Band> gram_band(const GramParams& g);

RecurrenceTable<double> gram_recursive(const GramParams& g, FillStats* stats = nullptr);
RecurrenceTable<Rational> gram_recursive_exact(const GramParams& g);
// Dense (pmax+1)^2 batched Gauss-Legendre values, row-major.
std::vector<double> gram_quadrature(const GramParams& g);

struct BenchRecord {
  std::string method;
  int pmax = 0;
  double wall_time = 0;  // seconds per kernel run (median over repeats)
  std::size_t nnz = 0;   // entries computed by the kernel
  double per_entry_time = 0;
  double seed_time = 0;  // recursive: seed share of the run (always reported)
  bool amortized = false;
};

// Times one Gram kernel: each repeat runs the kernel until at least `min_seconds` elapse
// (after one warm-up run) and the median per-run time is reported.
BenchRecord time_gram(const GramParams& g, GramMethod method, int repeats, bool amortized, double min_seconds = 0.02);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace jacrec
