#include <cmath>
#include <random>

#include "doctest.h"
#include "jacrec/jacobi.hpp"

using namespace jacrec;
using R = Rational;

TEST_CASE("jacobi_eval examples") {
  CHECK(jacobi_eval(0, 2.0, 1.0, 0.3) == 1.0);
  CHECK(jacobi_eval(2, R(1), R(0), R(1)) == R(3));
  CHECK(jacobi_eval(5, R(1), R(0), R(1, 2)) == jacobi_hyp(5, R(1), R(0), R(1, 2)));
  CHECK_THROWS_AS(jacobi_eval(2, R(-2), R(0), R(0)), DomainError);
  CHECK_THROWS_AS(jacobi_eval(2, R(0), R(-3, 2), R(0)), DomainError);
}

TEST_CASE("jacobi_all") {
  CHECK(jacobi_all(0, R(3), R(1), R(1, 5)).size() == 1);
  for (const auto& v : jacobi_all(3, R(0), R(0), R(1))) CHECK(v == R(1));
  const auto all = jacobi_all(4, R(2), R(1), R(-2, 5));
  for (int n = 0; n <= 4; ++n) CHECK(all[n] == jacobi_eval(n, R(2), R(1), R(-2, 5)));
}

TEST_CASE("jacobi_hyp examples") {
  CHECK(jacobi_hyp(1, R(0), R(0), R(3, 7)) == R(3, 7));
  CHECK(jacobi_hyp(2, R(0), R(0), R(0)) == R(-1, 2));
  CHECK(jacobi_hyp(3, R(2), R(1), R(7, 10)) == jacobi_eval(3, R(2), R(1), R(7, 10)));
  CHECK_THROWS_AS(jacobi_hyp(3, R(-2), R(0), R(0)), PoleError);
}

TEST_CASE("recurrence equals hypergeometric form exactly") {
  const R params[] = {R(0), R(1, 2), R(1), R(2), R(7, 2)};
  std::vector<R> xs;
  for (int k = 0; k < 20; ++k) xs.push_back(R(2 * k - 19, 19));
  for (const R& a : params)
    for (const R& b : params)
      for (const R& x : xs) {
        const auto all = jacobi_all(25, a, b, x);
        for (int n = 0; n <= 25; ++n) REQUIRE(all[n] == jacobi_hyp(n, a, b, x));
      }
}

TEST_CASE("value at one") {
  for (const R a : {R(0), R(3, 2), R(4)})
    for (int n = 0; n <= 30; ++n) CHECK(jacobi_eval(n, a, R(1, 3), R(1)) == pochhammer(a + 1, n) / factorial(n, a));
}

TEST_CASE("integrated polynomials") {
  CHECK(integrated_jacobi(1, R(2), R(3, 5)) == R(8, 5));
  for (int n = 1; n <= 8; ++n) CHECK(integrated_jacobi(n, R(5, 2), R(-1)) == R(0));
  CHECK_THROWS_AS(integrated_jacobi(0, R(2), R(0)), DomainError);
  CHECK_THROWS_AS(integrated_legendre(0, R(0)), DomainError);
  CHECK(integrated_legendre(2, R(0)) == R(-1, 2));
  CHECK(integrated_legendre(2, R(1)) == R(0));
  CHECK(integrated_legendre(2, R(-1)) == R(0));

  auto quad_antiderivative = [](int n, double alpha, double x) {
    const auto rule = gauss_legendre(20);
    const double half = (x + 1) / 2;
    return half * integrate(rule, [&](double t) { return jacobi_eval(n - 1, alpha, 0.0, -1 + half * (t + 1)); });
  };
  CHECK(std::fabs(integrated_jacobi(3, 3.0, 0.2) - quad_antiderivative(3, 3.0, 0.2)) <= 1e-13);
  CHECK(std::fabs(integrated_legendre(4, 0.3) - quad_antiderivative(4, 0.0, 0.3)) <= 1e-13);

  // exact antiderivative check via the hypergeometric oracle: p_n(x) - p_n(y) against exact integration is
  // covered by the derivative property below.
  for (double alpha : {0.0, 1.0, 2.5, 5.0})
    for (int n = 1; n <= 20; ++n)
      for (double x : {-0.7, 0.1, 0.55}) {
        const double h = 1e-6;
        const double d = (integrated_jacobi(n, alpha, x + h) - integrated_jacobi(n, alpha, x - h)) / (2 * h);
        CHECK(std::fabs(d - jacobi_eval(n - 1, alpha, 0.0, x)) <= 1e-8 * std::max(1.0, std::fabs(d)));
      }
}

TEST_CASE("identity examples") {
  CHECK(identity_residual(IdentityId::L7, 3, R(1), R(1), R(1, 4)) == R(0));
  CHECK(identity_residual(IdentityId::ThreeTerm, 2, R(0), R(0), R(1, 2)) == R(0));
  CHECK(identity_residual(IdentityId::Reflect, 1, R(2), R(1), R(1, 3)) == R(0));
  CHECK_THROWS_AS(identity_from_name("L9"), std::invalid_argument);
  CHECK_THROWS_AS(identity_residual(IdentityId::L5, 2, R(0), R(0), R(0)), DomainError);
}

TEST_CASE("identity catalog on a random rational grid") {
  std::mt19937_64 rng(2024);
  const R params[] = {R(0), R(1, 2), R(1), R(2), R(7, 2)};
  std::uniform_int_distribution<int> pick(0, 4), deg(0, 12), xn(-12, 12);
  for (IdentityId id : kAllIdentities) {
    int done = 0;
    while (done < 500) {
      const int n = deg(rng);
      const R a = params[pick(rng)], b = params[pick(rng)];
      if (!identity_in_regime(id, n, a, b)) continue;
      const R x(xn(rng), 12);
      REQUIRE_MESSAGE(identity_residual(id, n, a, b, x) == R(0), identity_name(id));
      ++done;
    }
  }
}
