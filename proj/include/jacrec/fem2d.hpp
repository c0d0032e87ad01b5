#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "jacrec/integrals.hpp"

namespace jacrec {

struct Point {
  double x = 0;
  double y = 0;
};

struct Triangle {
  std::array<Point, 3> v;
  double signed_area() const;
  double area() const;
  static Triangle reference();  // (-1,-1), (1,-1), (0,1)
};

std::array<double, 3> barycentric(const Triangle& tri, Point p);

enum class BasisKind { vertex, edge, interior };

// vertex: a = m (0..2); edge: a, b = 0-based end vertices, i = degree; interior: i, j.
struct BasisFn {
  BasisKind kind = BasisKind::vertex;
  int a = 0;
  int b = 0;
  int i = 0;
  int j = 0;
  friend bool operator==(const BasisFn&, const BasisFn&) = default;
};

// Order: vertices, edges [1,2], [2,3], [3,1] (i = 2..p), interior (i, j) by i then j.
std::vector<BasisFn> basis_functions(int p);
std::size_t basis_count(int p);

// s^i * p_i^{(0,0)}(d/s), evaluated without dividing by s (s = la + lb, d = lb - la).
double scaled_edge_value(int i, double la, double lb);

double eval_basis(const Triangle& tri, const BasisFn& fn, Point p);
double eval_basis_barycentric(const BasisFn& fn, const std::array<double, 3>& lambda);

// The two one-dimensional integrals whose product is the reference mass entry m_{ij,kl}.
std::pair<IntegralSpec<Rational>, IntegralSpec<Rational>> duffy_factor(int i, int j, int k, int l);

// Possibly nonzero interior-interior entry.
bool interior_pattern(int i, int j, int k, int l);

struct MassEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0;
};

struct MassMatrixCOO {
  std::size_t dimension = 0;
  std::vector<MassEntry> entries;  // sorted by (row, col), no duplicates, both triangles stored
  bool symmetric_storage = false;

  // Value at (row, col); 0 for entries not stored.
  double at(std::size_t row, std::size_t col) const;
  std::size_t nnz() const { return entries.size(); }
  double max_abs() const;
};

// Merge per-worker buffers into a sorted COO (duplicates are a logic error).
MassMatrixCOO merge_entries(std::size_t dimension, std::vector<std::vector<MassEntry>> buffers);

// Table-driven assembly over the Duffy factorization; threads > 1 splits the interior block.
MassMatrixCOO assemble_mass_recursive(int p, const Triangle& tri, int threads = 1);

// Dense tensor Gauss-Legendre assembly in collapsed coordinates; entries with
// |v| <= drop_relative * max|M| are omitted (exact zeros are always omitted).
MassMatrixCOO assemble_mass_quadrature(int p, const Triangle& tri, double drop_relative = 0.0);

// Lower triangle with the symmetric header, 1-based indices.
void write_matrix_market(std::ostream& out, const MassMatrixCOO& m);
// Plain PBM spy pattern, one pixel per entry.
void write_pbm(std::ostream& out, const MassMatrixCOO& m);

}  // namespace jacrec
