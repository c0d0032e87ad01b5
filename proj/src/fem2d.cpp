#include "jacrec/fem2d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

namespace jacrec {
namespace {

double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

void check_nondegenerate(const Triangle& tri) {
  double scale = 0;
  for (const auto& v : tri.v) scale = std::max({scale, std::abs(v.x), std::abs(v.y)});
  if (!(std::abs(tri.signed_area()) > 1e-14 * std::max(scale * scale, 1e-300)))
    throw DomainError("triangle: degenerate (zero signed area)");
}

// Degree-ordered collapsed-coordinate rule on the reference element.
struct CollapsedRule {
  std::vector<std::array<double, 3>> lambda;
  std::vector<double> weight;
};

CollapsedRule collapsed_rule(int k) {
  const QuadratureRule& g = gauss_legendre(k);
  CollapsedRule r;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) {
      const double z = g.nodes[a], y = g.nodes[b];
      r.lambda.push_back({(1 - y) * (1 - z) / 4, (1 - y) * (1 + z) / 4, (1 + y) / 2});
      r.weight.push_back(g.weights[a] * g.weights[b] * (1 - y) / 2);
    }
  return r;
}

struct Layout {
  int p;
  std::size_t vertex(int m) const { return static_cast<std::size_t>(m); }
  std::size_t edge(int e, int i) const { return 3 + static_cast<std::size_t>(e) * (p - 1) + (i - 2); }
  std::size_t interior(int i, int j) const {
    // interior functions with first index i' < i come first: sum_{i'=2}^{i-1} (p - i')
    std::size_t off = 3 + 3 * static_cast<std::size_t>(p - 1);
    for (int q = 2; q < i; ++q) off += p - q;
    return off + (j - 1);
  }
};

// Values of the listed functions at every rule node, row-major (function, node).
std::vector<double> sample(const std::vector<BasisFn>& fns, const CollapsedRule& rule) {
  std::vector<double> F(fns.size() * rule.weight.size());
  for (std::size_t f = 0; f < fns.size(); ++f)
    for (std::size_t q = 0; q < rule.weight.size(); ++q)
      F[f * rule.weight.size() + q] = eval_basis_barycentric(fns[f], rule.lambda[q]);
  return F;
}

double weighted_dot(const std::vector<double>& A, std::size_t a, const std::vector<double>& B, std::size_t b,
                    const std::vector<double>& w) {
  const std::size_t Q = w.size();
  double s = 0;
  for (std::size_t q = 0; q < Q; ++q) s += w[q] * A[a * Q + q] * B[b * Q + q];
  return s;
}

}  // namespace

double Triangle::signed_area() const { return cross(sub(v[1], v[0]), sub(v[2], v[0])) / 2; }
double Triangle::area() const { return std::abs(signed_area()); }
Triangle Triangle::reference() { return {{Point{-1, -1}, Point{1, -1}, Point{0, 1}}}; }

std::array<double, 3> barycentric(const Triangle& tri, Point p) {
  check_nondegenerate(tri);
  const double det = 2 * tri.signed_area();
  const Point d = sub(p, tri.v[0]);
  const double l2 = cross(d, sub(tri.v[2], tri.v[0])) / det;
  const double l3 = cross(sub(tri.v[1], tri.v[0]), d) / det;
  return {1 - l2 - l3, l2, l3};
}

std::vector<BasisFn> basis_functions(int p) {
  if (p < 1) throw DomainError("basis_functions: p must be positive");
  std::vector<BasisFn> out;
  for (int m = 0; m < 3; ++m) out.push_back({BasisKind::vertex, m, 0, 0, 0});
  const int ends[3][2] = {{0, 1}, {1, 2}, {2, 0}};
  for (const auto& e : ends)
    for (int i = 2; i <= p; ++i) out.push_back({BasisKind::edge, e[0], e[1], i, 0});
  for (int i = 2; i <= p; ++i)
    for (int j = 1; i + j <= p; ++j) out.push_back({BasisKind::interior, 0, 0, i, j});
  return out;
}

std::size_t basis_count(int p) { return static_cast<std::size_t>(p + 1) * (p + 2) / 2; }

double scaled_edge_value(int i, double la, double lb) {
  const double s = la + lb, d = lb - la;
  if (i < 1) throw DomainError("scaled_edge_value: degree must be positive");
  if (i == 1) return d + s;
  // p_i^{(0,0)}(x) = (x^2 - 1)/(2(i-1)) P_{i-2}^{(1,1)}(x); q_k = s^k P_k^{(1,1)}(d/s)
  double q0 = 1, q1 = 2 * d;
  const int n = i - 2;
  double qn = n == 0 ? q0 : q1;
  for (int k = 2; k <= n; ++k) {
    const double a1 = 2.0 * k * (k + 2) * (2 * k);
    const double a3 = (2.0 * k) * (2 * k + 1) * (2 * k + 2);
    const double a4 = 2.0 * k * k * (2 * k + 2);
    qn = (a3 * d * q1 - a4 * s * s * q0) / a1;
    q0 = q1;
    q1 = qn;
  }
  return (d * d - s * s) / (2 * (i - 1)) * qn;
}

double eval_basis_barycentric(const BasisFn& fn, const std::array<double, 3>& l) {
  double v = 0;
  switch (fn.kind) {
    case BasisKind::vertex: v = l[fn.a]; break;
    case BasisKind::edge: v = scaled_edge_value(fn.i, l[fn.a], l[fn.b]); break;
    case BasisKind::interior:
      v = scaled_edge_value(fn.i, l[0], l[1]) * integrated_jacobi(fn.j, 2.0 * fn.i - 1, 2 * l[2] - 1);
      break;
  }
  if (!std::isfinite(v)) throw EvaluationError("eval_basis: non-finite value");
  return v;
}

double eval_basis(const Triangle& tri, const BasisFn& fn, Point p) {
  return eval_basis_barycentric(fn, barycentric(tri, p));
}

std::pair<IntegralSpec<Rational>, IntegralSpec<Rational>> duffy_factor(int i, int j, int k, int l) {
  if (i < 2 || k < 2 || j < 1 || l < 1) throw DomainError("duffy_factor: interior indices need i, k >= 2 and j, l >= 1");
  return {integrated_spec(i, k, Rational(0), Rational(0), Rational(0)),
          integrated_spec(j, l, Rational(2 * i - 1), Rational(2 * k - 1), Rational(i + k + 1))};
}

bool interior_pattern(int i, int j, int k, int l) {
  const int d = std::abs(i - k);
  return std::abs(i + j - k - l) <= 4 && (d == 0 || d == 2);
}

double MassMatrixCOO::at(std::size_t row, std::size_t col) const {
  const auto it = std::lower_bound(entries.begin(), entries.end(), std::pair{row, col},
                                   [](const MassEntry& e, const std::pair<std::size_t, std::size_t>& k) {
                                     return std::pair{e.row, e.col} < k;
                                   });
  return it != entries.end() && it->row == row && it->col == col ? it->value : 0.0;
}

double MassMatrixCOO::max_abs() const {
  double m = 0;
  for (const auto& e : entries) m = std::max(m, std::abs(e.value));
  return m;
}

MassMatrixCOO merge_entries(std::size_t dimension, std::vector<std::vector<MassEntry>> buffers) {
  MassMatrixCOO m;
  m.dimension = dimension;
  for (auto& b : buffers) m.entries.insert(m.entries.end(), b.begin(), b.end());
  std::sort(m.entries.begin(), m.entries.end(),
            [](const MassEntry& a, const MassEntry& b) { return std::pair{a.row, a.col} < std::pair{b.row, b.col}; });
  for (std::size_t i = 1; i < m.entries.size(); ++i)
    if (m.entries[i].row == m.entries[i - 1].row && m.entries[i].col == m.entries[i - 1].col)
      throw std::logic_error("merge_entries: duplicate entry");
  return m;
}

MassMatrixCOO assemble_mass_recursive(int p, const Triangle& tri, int threads) {
  if (p < 2) throw DomainError("assemble_mass_recursive: p must be at least 2");
  check_nondegenerate(tri);
  const double scale = tri.area() / 2;
  const Layout L{p};
  const auto fns = basis_functions(p);
  threads = std::max(1, threads);

  // I_z(i, k) = int p_i p_k dz over integrated Legendre functions
  const auto Iz = fill_recint(0.0, 0.0, 0.0, p, p);
  auto pair_ok = [](int i, int k) { return i == k || std::abs(i - k) == 2; };

  std::vector<std::vector<MassEntry>> table_part(threads);
  auto interior_worker = [&](int w) {
    auto& out = table_part[w];
    for (int i = 2 + w; i <= p - 1; i += threads)
      for (int k = 2; k <= p - 1; ++k) {
        if (!pair_ok(i, k)) continue;
        const double z = Iz.at(i, k);
        // |i+j-k-l| <= 4 bounds j - l; entries outside the band vanish identically
        const auto Iy = fill_recint(double(i + k + 1), 2.0 * i - 1, 2.0 * k - 1, p - i, p - k,
                                    Band{-4 - (i - k), 4 - (i - k)});
        for (int j = 1; j <= p - i; ++j) {
          const auto [lo, hi] = Iy.row_range(j);
          for (int l = lo; l <= hi; ++l) out.push_back({L.interior(i, j), L.interior(k, l), scale * z * Iy.at(j, l)});
        }
      }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < threads; ++w) pool.emplace_back(interior_worker, w);
  interior_worker(0);
  for (auto& t : pool) t.join();

  std::vector<MassEntry> edge_part;
  for (int i = 2; i <= p; ++i)
    for (int k = 2; k <= p; ++k) {
      if (!pair_ok(i, k)) continue;
      const double z = Iz.at(i, k);
      // edge [1,2] is the interior family with a constant V3-direction factor
      const double ee = scale * z * 2.0 / (i + k + 2);
      for (int e = 0; e < 3; ++e) edge_part.push_back({L.edge(e, i), L.edge(e, k), ee});
      if (k > p - 1) continue;
      for (int l = 1; l <= std::min(p - k, i - k + 4); ++l) {
        // p_l^{(2k-1,0)} = (1+y)/l P_{l-1}^{(2k-2,1)}
        const IntegralSpec<double> s{l - 1, 0, 2.0 * k - 2, 1.0, 0.0, 0.0, double(i + k + 1), 1.0, IntegralKind::plain};
        const double v = scale * z * (2.0 / l) * integral_direct(s);
        edge_part.push_back({L.edge(0, i), L.interior(k, l), v});
        edge_part.push_back({L.interior(k, l), L.edge(0, i), v});
      }
    }

  // vertex rows and the edge [2,3], [3,1] cross blocks by collapsed quadrature
  const CollapsedRule rule = collapsed_rule(p + 2);
  const auto F = sample(fns, rule);
  enum Group { V, E12, E23, E31, I };
  auto group = [](const BasisFn& f) {
    if (f.kind == BasisKind::vertex) return V;
    if (f.kind == BasisKind::interior) return I;
    return f.a == 0 ? E12 : (f.a == 1 ? E23 : E31);
  };
  auto by_quadrature = [](Group a, Group b) {
    if (a == V || b == V) return true;
    if (a == b) return false;
    if ((a == E12 && b == I) || (a == I && b == E12)) return false;
    return true;
  };
  std::vector<MassEntry> quad_part;
  for (std::size_t r = 0; r < fns.size(); ++r)
    for (std::size_t c = 0; c < fns.size(); ++c)
      if (by_quadrature(group(fns[r]), group(fns[c])))
        quad_part.push_back({r, c, scale * weighted_dot(F, r, F, c, rule.weight)});

  double mx = 0;
  for (const auto& b : {table_part, std::vector<std::vector<MassEntry>>{edge_part, quad_part}})
    for (const auto& v : b)
      for (const auto& e : v) mx = std::max(mx, std::abs(e.value));
  std::erase_if(quad_part, [&](const MassEntry& e) { return std::abs(e.value) <= 1e-14 * mx; });
  table_part.push_back(std::move(edge_part));
  table_part.push_back(std::move(quad_part));
  return merge_entries(fns.size(), std::move(table_part));
}

MassMatrixCOO assemble_mass_quadrature(int p, const Triangle& tri, double drop_relative) {
  if (p < 2) throw DomainError("assemble_mass_quadrature: p must be at least 2");
  check_nondegenerate(tri);
  const auto fns = basis_functions(p);
  const CollapsedRule rule = collapsed_rule(p + 2);
  const double jac = tri.area() / 2;
  const std::size_t Q = rule.weight.size();
  // evaluate through the physical triangle so barycentric() is exercised
  std::vector<double> F(fns.size() * Q);
  for (std::size_t q = 0; q < Q; ++q) {
    const auto& l = rule.lambda[q];
    const Point x{l[0] * tri.v[0].x + l[1] * tri.v[1].x + l[2] * tri.v[2].x,
                  l[0] * tri.v[0].y + l[1] * tri.v[1].y + l[2] * tri.v[2].y};
    for (std::size_t f = 0; f < fns.size(); ++f) F[f * Q + q] = eval_basis(tri, fns[f], x);
  }
  std::vector<double> w(rule.weight);
  for (auto& v : w) v *= jac;
  std::vector<MassEntry> all;
  for (std::size_t r = 0; r < fns.size(); ++r)
    for (std::size_t c = r; c < fns.size(); ++c) {
      const double v = weighted_dot(F, r, F, c, w);
      all.push_back({r, c, v});
      if (c != r) all.push_back({c, r, v});
    }
  double mx = 0;
  for (const auto& e : all) mx = std::max(mx, std::abs(e.value));
  std::erase_if(all, [&](const MassEntry& e) { return e.value == 0.0 || std::abs(e.value) <= drop_relative * mx; });
  return merge_entries(fns.size(), {std::move(all)});
}

void write_matrix_market(std::ostream& out, const MassMatrixCOO& m) {
  std::size_t lower = 0;
  for (const auto& e : m.entries) lower += e.row >= e.col;
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  out << m.dimension << ' ' << m.dimension << ' ' << lower << '\n';
  char buf[64];
  for (const auto& e : m.entries) {
    if (e.row < e.col) continue;
    std::snprintf(buf, sizeof buf, "%.17g", e.value);
    out << e.row + 1 << ' ' << e.col + 1 << ' ' << buf << '\n';
  }
}

void write_pbm(std::ostream& out, const MassMatrixCOO& m) {
  out << "P1\n" << m.dimension << ' ' << m.dimension << '\n';
  std::vector<char> row(m.dimension);
  auto it = m.entries.begin();
  for (std::size_t r = 0; r < m.dimension; ++r) {
    std::fill(row.begin(), row.end(), '0');
    for (; it != m.entries.end() && it->row == r; ++it) row[it->col] = '1';
    // plain PBM lines stay within 70 characters
    for (std::size_t c = 0; c < m.dimension; c += 70) out.write(row.data() + c, std::min<std::size_t>(70, m.dimension - c)) << '\n';
  }
}

}  // namespace jacrec
