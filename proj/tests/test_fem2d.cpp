#include <cmath>
#include <sstream>

#include "doctest.h"
#include "jacrec/fem2d.hpp"

using namespace jacrec;
using R = Rational;

namespace {

const Triangle kRef = Triangle::reference();
const Triangle kAffine{{Point{0.3, -0.2}, Point{2.1, 0.4}, Point{0.7, 1.9}}};

double max_rel_dev(const MassMatrixCOO& a, const MassMatrixCOO& b) {
  const double scale = b.max_abs();
  double dev = 0;
  for (const auto& e : a.entries) dev = std::max(dev, std::abs(e.value - b.at(e.row, e.col)));
  return dev / scale;
}

}  // namespace

TEST_CASE("barycentric coordinates") {
  const auto v2 = barycentric(kRef, kRef.v[1]);
  CHECK(v2[0] == doctest::Approx(0.0));
  CHECK(v2[1] == doctest::Approx(1.0));
  CHECK(v2[2] == doctest::Approx(0.0));
  const Point c{(0.3 + 2.1 + 0.7) / 3, (-0.2 + 0.4 + 1.9) / 3};
  for (double l : barycentric(kAffine, c)) CHECK(l == doctest::Approx(1.0 / 3));
  const auto o = barycentric(kRef, {0, 0});
  CHECK(o[0] == 0.25);
  CHECK(o[1] == 0.25);
  CHECK(o[2] == 0.5);
  CHECK_THROWS_AS(barycentric(Triangle{{Point{0, 0}, Point{1, 1}, Point{2, 2}}}, {0, 0}), DomainError);
}

TEST_CASE("basis enumeration") {
  for (int p = 1; p <= 12; ++p) CHECK(basis_functions(p).size() == basis_count(p));
  const auto b = basis_functions(4);
  CHECK(b[3] == BasisFn{BasisKind::edge, 0, 1, 2, 0});
  CHECK(b[12] == BasisFn{BasisKind::interior, 0, 0, 2, 1});
  CHECK(b.back() == BasisFn{BasisKind::interior, 0, 0, 3, 1});
}

TEST_CASE("basis evaluation") {
  for (int m = 0; m < 3; ++m) CHECK(eval_basis(kRef, {BasisKind::vertex, m}, kRef.v[m]) == doctest::Approx(1.0));
  for (int i = 2; i <= 8; ++i) CHECK(eval_basis(kRef, {BasisKind::edge, 0, 1, i, 0}, kRef.v[2]) == 0.0);
  const Point c{0, -1.0 / 3};
  const double expect = integrated_legendre(2, 0.0) * (4.0 / 9) * integrated_jacobi(1, 3.0, -1.0 / 3);
  CHECK(eval_basis(kRef, {BasisKind::interior, 0, 0, 2, 1}, c) == doctest::Approx(expect).epsilon(1e-14));
  // the homogeneous edge form matches the ratio form away from the singular vertex
  for (int i = 1; i <= 12; ++i)
    for (double la : {0.1, 0.35, 0.7})
      for (double lb : {0.05, 0.2, 0.3}) {
        const double s = la + lb;
        CHECK(scaled_edge_value(i, la, lb) ==
              doctest::Approx(integrated_legendre(i, (lb - la) / s) * std::pow(s, i)).epsilon(1e-12));
      }
}

TEST_CASE("interior pattern and Duffy factors") {
  CHECK(interior_pattern(2, 1, 2, 1));
  CHECK_FALSE(interior_pattern(2, 1, 3, 1));
  CHECK_FALSE(interior_pattern(2, 1, 4, 8));
  CHECK(interior_pattern(2, 5, 2, 5));
  const auto [z, y] = duffy_factor(2, 1, 2, 1);
  CHECK(z.kind == IntegralKind::integrated);
  CHECK(z.n == 2);
  CHECK(z.m == 2);
  CHECK(z.mu == R(0));
  CHECK(y.mu == R(5));
  CHECK(y.alpha == R(3));
  CHECK(y.rho == R(3));
  CHECK(y.n == 1);
  CHECK(y.m == 1);
  CHECK(integral_direct(duffy_factor(2, 1, 3, 1).first) == R(0));
  const auto q = assemble_mass_quadrature(4, kRef);
  const std::size_t idx = 3 + 3 * 3;  // psi_{2,1}
  CHECK(std::abs((integral_direct(z) * integral_direct(y)).to_double() - q.at(idx, idx)) <= 1e-12 * q.at(idx, idx));
}

TEST_CASE("quadrature assembly properties") {
  const auto m2 = assemble_mass_quadrature(2, kRef);
  CHECK(m2.at(6, 6) == doctest::Approx(0.0));  // p = 2 has no interior function
  const auto m3 = assemble_mass_quadrature(3, kRef);
  CHECK(m3.at(9, 9) > 0);
  const auto m4 = assemble_mass_quadrature(4, kAffine);
  for (const auto& e : m4.entries) CHECK(std::abs(e.value - m4.at(e.col, e.row)) <= 1e-13 * m4.max_abs());
  // Cholesky of the interior block at p = 5
  const auto m5 = assemble_mass_quadrature(5, kRef);
  const std::size_t first = 3 + 3 * 4, n = basis_count(5) - first;
  std::vector<double> A(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) A[r * n + c] = m5.at(first + r, first + c);
  bool ok = true;
  for (std::size_t k = 0; k < n; ++k) {
    double d = A[k * n + k];
    for (std::size_t s = 0; s < k; ++s) d -= A[k * n + s] * A[k * n + s];
    if (d <= 1e-10) ok = false;
    d = std::sqrt(std::max(d, 0.0));
    A[k * n + k] = d;
    for (std::size_t r = k + 1; r < n; ++r) {
      double v = A[r * n + k];
      for (std::size_t s = 0; s < k; ++s) v -= A[r * n + s] * A[k * n + s];
      A[r * n + k] = v / d;
    }
  }
  CHECK(ok);
}

TEST_CASE("recursive assembly matches quadrature") {
  for (int p : {2, 3, 4, 8, 12})
    for (const auto& tri : {kRef, kAffine}) {
      const auto r = assemble_mass_recursive(p, tri);
      const auto q = assemble_mass_quadrature(p, tri);
      CHECK(max_rel_dev(r, q) <= 1e-12);
      // every quadrature entry missing from the recursive matrix is negligible
      double missing = 0;
      for (const auto& e : q.entries)
        if (r.at(e.row, e.col) == 0.0) missing = std::max(missing, std::abs(e.value));
      CHECK(missing <= 1e-13 * q.max_abs());
    }
}

TEST_CASE("recursive assembly omits off-pattern interior entries") {
  const int p = 10;
  const auto r = assemble_mass_recursive(p, kRef);
  const auto fns = basis_functions(p);
  for (const auto& e : r.entries) {
    const auto& a = fns[e.row];
    const auto& b = fns[e.col];
    if (a.kind == BasisKind::interior && b.kind == BasisKind::interior) CHECK(interior_pattern(a.i, a.j, b.i, b.j));
  }
}

TEST_CASE("affine scaling and thread determinism") {
  const Triangle doubled{{Point{-2, -1}, Point{2, -1}, Point{0, 1}}};
  const auto a = assemble_mass_recursive(6, kRef);
  const auto b = assemble_mass_recursive(6, doubled);
  REQUIRE(a.nnz() == b.nnz());
  for (std::size_t i = 0; i < a.nnz(); ++i) CHECK(b.entries[i].value == 2 * a.entries[i].value);
  const auto t1 = assemble_mass_recursive(14, kAffine, 1);
  const auto t4 = assemble_mass_recursive(14, kAffine, 4);
  REQUIRE(t1.nnz() == t4.nnz());
  bool same = true;
  for (std::size_t i = 0; i < t1.nnz(); ++i)
    same = same && t1.entries[i].row == t4.entries[i].row && t1.entries[i].col == t4.entries[i].col &&
           t1.entries[i].value == t4.entries[i].value;
  CHECK(same);
  CHECK_THROWS_AS(assemble_mass_recursive(4, Triangle{{Point{0, 0}, Point{1, 0}, Point{2, 0}}}), DomainError);
}

TEST_CASE("interior nnz grows quadratically") {
  auto pattern_count = [](int p) {
    std::size_t c = 0;
    for (int i = 2; i <= p; ++i)
      for (int j = 1; i + j <= p; ++j)
        for (int k = 2; k <= p; ++k)
          for (int l = 1; k + l <= p; ++l) c += interior_pattern(i, j, k, l);
    return c;
  };
  for (int p : {8, 16, 32, 64}) {
    const auto m = assemble_mass_recursive(p, kRef);
    const std::size_t first = 3 + 3 * static_cast<std::size_t>(p - 1), n = basis_count(p) - first;
    std::size_t nnz = 0;
    for (const auto& e : m.entries) nnz += e.row >= first && e.col >= first;
    CHECK(nnz == pattern_count(p));
    CHECK(nnz <= 27 * n);  // at most 3 values of k and 9 of l per row
  }
  // least-squares exponent once rows are past the boundary layer
  std::vector<double> lp, ln;
  for (int p : {32, 64, 128}) {
    lp.push_back(std::log(p));
    ln.push_back(std::log(double(pattern_count(p))));
  }
  const double mx = (lp[0] + lp[1] + lp[2]) / 3, my = (ln[0] + ln[1] + ln[2]) / 3;
  double sxy = 0, sxx = 0;
  for (int k = 0; k < 3; ++k) {
    sxy += (lp[k] - mx) * (ln[k] - my);
    sxx += (lp[k] - mx) * (lp[k] - mx);
  }
  const double slope = sxy / sxx;
  CHECK(slope >= 1.8);
  CHECK(slope <= 2.2);
}

TEST_CASE("matrix market and pbm writers") {
  const auto m = assemble_mass_recursive(2, kRef);
  std::ostringstream mm, pbm;
  write_matrix_market(mm, m);
  CHECK(mm.str().rfind("%%MatrixMarket matrix coordinate real symmetric\n6 6 ", 0) == 0);
  write_pbm(pbm, m);
  CHECK(pbm.str().rfind("P1\n6 6\n", 0) == 0);
  std::size_t ones = 0;
  for (char c : pbm.str().substr(7)) ones += c == '1';
  CHECK(ones == m.nnz());
}
