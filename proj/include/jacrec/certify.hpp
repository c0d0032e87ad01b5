#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jacrec/rational.hpp"

namespace jacrec {

// Outcome of one exact residual sweep.
struct SuiteReport {
  std::string name;
  long cases = 0;
  Rational max_abs_residual;
  std::string first_failure;  // empty when every residual vanished
  bool ok() const { return first_failure.empty(); }
};

// Every catalog relation on `cases` random in-regime specs each.
std::vector<SuiteReport> certify_relations(int cases, std::uint64_t seed);
// Every Jacobi identity on `cases` random rational (n, alpha, beta, x) each.
std::vector<SuiteReport> certify_identities(int cases, std::uint64_t seed);
// Closed summation formulas against brute-force terminating sums, m = 0..mmax per parameter set.
std::vector<SuiteReport> certify_summations(int cases, int mmax, std::uint64_t seed);
// Recursive tables against the direct-sum oracle on random families.
std::vector<SuiteReport> certify_oracles(int cases, std::uint64_t seed);

}  // namespace jacrec
