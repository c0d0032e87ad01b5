#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "jacrec/relations.hpp"

namespace jacrec {

// Random rational Kampe specs on the certification grid: n, m, mu, nu in [0, 6],
// alpha, beta, rho, delta in {0, 1/2, 1, 3/2, 2}, x, y in [-2, 2] with denominators up to 6.
inline KampeSpec<Rational> random_kampe_spec(std::mt19937_64& rng) {
  static const Rational grid[] = {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
  std::uniform_int_distribution<int> deg(0, 6), pick(0, 4), den(1, 6);
  auto param = [&] { return grid[pick(rng)]; };
  auto point = [&] {
    const int d = den(rng);
    std::uniform_int_distribution<int> num(-2 * d, 2 * d);
    return Rational(num(rng), d);
  };
  KampeSpec<Rational> s;
  s.n = deg(rng);
  s.m = deg(rng);
  s.alpha = param();
  s.beta = param();
  s.rho = param();
  s.delta = param();
  s.mu = Rational(deg(rng));
  s.nu = Rational(deg(rng));
  s.x = point();
  s.y = point();
  return s;
}

// `count` in-regime specs for the relation, reproducible from the seed.
inline std::vector<KampeSpec<Rational>> sample_relation_specs(const Relation<Rational>& rel, int count,
                                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<KampeSpec<Rational>> out;
  for (long attempt = 0; static_cast<int>(out.size()) < count; ++attempt) {
    if (attempt > 1000L * count + 10000) throw std::runtime_error("cannot sample regime of " + rel.id);
    auto s = random_kampe_spec(rng);
    if (rel.project) rel.project(s);
    if (relation_in_regime(rel, s)) out.push_back(relation_spec(rel, s));
  }
  return out;
}

}  // namespace jacrec
