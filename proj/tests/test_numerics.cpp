#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "jacrec/numerics.hpp"

using namespace jacrec;

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(Rational(7, 2), 0) == Rational(1));
  CHECK(pochhammer(Rational(3), 4) == Rational(360));
  CHECK(pochhammer(Rational(-2), 3) == Rational(0));
  CHECK(pochhammer(3.0, 4) == 360.0);
  CHECK_THROWS_AS(pochhammer(Rational(1), -1), DomainError);
}

TEST_CASE("pochhammer step property") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
  std::uniform_int_distribution<int> nn(0, 29);
  for (int t = 0; t < 100; ++t) {
    const Rational a(num(rng), den(rng));
    const int n = nn(rng);
    CHECK(pochhammer(a, n + 1) == pochhammer(a, n) * (a + n));
  }
}

TEST_CASE("beta function") {
  CHECK(beta_function(Rational(1), Rational(1)) == Rational(1));
  CHECK(beta_function(Rational(2), Rational(3)) == Rational(1, 12));
  CHECK(std::fabs(beta_function(1.5, 1.5) - std::numbers::pi / 8) <= 1e-14 * std::numbers::pi / 8);
  CHECK_THROWS_AS(beta_function(Rational(0), Rational(1)), DomainError);
  CHECK_THROWS_AS(beta_function(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(beta_function(Rational(3, 2), Rational(1)), DomainError);
  for (double x : {0.3, 1.0, 2.5, 7.25}) {
    for (double y : {0.5, 1.75, 4.0}) {
      const double b = beta_function(x, y);
      CHECK(std::fabs(b - beta_function(y, x)) <= 1e-13 * b);
      CHECK(std::fabs(beta_function(x + 1, y) - b * x / (x + y)) <= 1e-13 * b);
    }
  }
}

TEST_CASE("gauss-legendre rules") {
  const auto r1 = gauss_legendre(1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));
  const auto r2 = gauss_legendre(2);
  CHECK(std::fabs(r2.nodes[1] - 1 / std::sqrt(3.0)) < 1e-15);
  CHECK(r2.nodes[0] == -r2.nodes[1]);
  CHECK(std::fabs(r2.weights[0] - 1) < 1e-15);
  CHECK(std::fabs(integrate(gauss_legendre(3), [](double x) { return std::pow(x, 4); }) - 0.4) <= 1e-14);
  CHECK(integrate(r2, [](double) { return 1.0; }) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::fabs(integrate(r2, [](double x) { return x * x; }) - 2.0 / 3) <= 1e-15);
  CHECK(std::fabs(integrate(gauss_legendre(5), [](double x) { return std::pow(x, 8); }) - 2.0 / 9) <= 1e-14);
  CHECK_THROWS_AS(integrate(r2, [](double) { return std::nan(""); }), EvaluationError);
  CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("gauss-legendre invariants up to k=64") {
  for (int k = 1; k <= 64; ++k) {
    const auto r = gauss_legendre(k);
    REQUIRE(r.size() == static_cast<std::size_t>(k));
    CHECK(r.exactness_degree == 2 * k - 1);
    double wsum = 0;
    for (int i = 0; i < k; ++i) {
      wsum += r.weights[i];
      CHECK(r.weights[i] > 0);
      CHECK(r.nodes[i] == -r.nodes[k - 1 - i]);
      if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
      const auto [pk, dpk] = legendre_with_derivative(k, r.nodes[i]);
      // binary64 nodes leave |P_k| ~ |P_k'| ulp/2, which exceeds 1e-14 beyond k ~ 30
      if (k <= 30) CHECK(std::fabs(pk) <= 1e-14);
      CHECK(std::fabs(pk / dpk) <= 1e-15);
    }
    CHECK(std::fabs(wsum - 2) <= 1e-14);
    for (int d = 0; d <= 2 * k - 1; ++d) {
      const double exact = d % 2 ? 0.0 : 2.0 / (d + 1);
      CHECK(std::fabs(integrate(r, [d](double x) { return std::pow(x, d); }) - exact) <= 1e-13);
    }
  }
}

TEST_CASE("scalar modes") {
  const Scalar a = Scalar::from_ratio(1, 3, Mode::exact);
  const Scalar b = Scalar(0.5);
  CHECK((a + a).str() == "2/3");
  CHECK_THROWS_AS(a + b, MixedModeError);
  CHECK_THROWS_AS((void)(a < b), MixedModeError);
  CHECK_THROWS_AS(Scalar(std::nan("")), EvaluationError);
  CHECK_THROWS_AS(b / Scalar(0.0), EvaluationError);
  CHECK_THROWS_AS(a / Scalar::from_int(0, Mode::exact), DomainError);
  CHECK((a * 3).str() == "1/1");
  CHECK((b + 1).to_double() == 1.5);
  CHECK(pochhammer(Scalar::from_int(3, Mode::exact), 4) == Scalar::from_int(360, Mode::exact));
  CHECK(Rational::parse("6/-4") == Rational(-3, 2));
  CHECK(Rational(4, -6).str() == "-2/3");
}
