#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jacrec/hyper.hpp"

namespace jacrec {

enum class Evaluation {
  at_one,   // the relation holds only at x = y = 1 (integral level)
  general,  // the relation holds for the series at any (x, y)
};

enum class TermOp { value, theta_x, theta_y };

template <Field T>
using Coefficient = T (*)(const KampeSpec<T>&);

template <Field T>
struct RelationTerm {
  ParameterShift shift;
  TermOp op = TermOp::value;
  Coefficient<T> coef = nullptr;
};

// A linear relation sum_t coef_t(spec) * op_t F(spec + shift_t) = 0.
template <Field T>
struct Relation {
  std::string id;
  KampeForm form = KampeForm::standard;
  Evaluation evaluation = Evaluation::at_one;
  std::vector<RelationTerm<T>> terms;
  bool (*constraint)(const KampeSpec<T>&) = nullptr;  // extra parameter constraint, if any
  void (*project)(KampeSpec<T>&) = nullptr;           // maps an arbitrary spec onto the constraint
};

namespace detail {

template <Field T>
T rising3(const T& v) {
  return v * (v + 1) * (v + 2);
}

// Coefficient of F(n+k), k in {1, 0, -1}, in the n-side five-point operators (s = 2n+a+b).
template <Field T>
T five_point_side(int which, int k, int n, const T& a, const T& b) {
  const T s = a + b + 2 * n;
  const T s2 = s + 2;
  const T nab = a + b + n;
  T c1, c2;
  if (k == 1) {
    c1 = (n + 1) * s * (nab + 1);
    c2 = c1;
  } else if (k == 0) {
    c1 = -((n + 1) * s * (b + (n + 1))) - s2 * (a + n) * nab;
    c2 = (n + 1) * s * (a + (n + 1)) + s2 * (b + n) * nab;
  } else {
    c1 = s2 * (a + n) * (b + n);
    c2 = c1;
  }
  if (which == 1) return c1;
  if (which == 2) return c2;
  return c1 + c2;
}

template <Field T>
T five_point_coef(const KampeSpec<T>& p, int which, bool n_side, int k) {
  if (n_side) return rising3(p.rho + p.delta + 2 * p.m) * five_point_side(which, k, p.n, p.alpha, p.beta);
  return -(rising3(p.alpha + p.beta + 2 * p.n) * five_point_side(which, k, p.m, p.rho, p.delta));
}

template <Field T>
std::vector<RelationTerm<T>> five_point_terms(int which) {
  using K = KampeSpec<T>;
  std::vector<RelationTerm<T>> t;
  Coefficient<T> table[3][2];
  // Function pointers cannot capture `which`; enumerate the three variants explicitly.
  if (which == 1) {
    table[0][0] = [](const K& p) { return five_point_coef(p, 1, true, 1); };
    table[1][0] = [](const K& p) { return five_point_coef(p, 1, true, 0); };
    table[2][0] = [](const K& p) { return five_point_coef(p, 1, true, -1); };
    table[0][1] = [](const K& p) { return five_point_coef(p, 1, false, 1); };
    table[1][1] = [](const K& p) { return five_point_coef(p, 1, false, 0); };
    table[2][1] = [](const K& p) { return five_point_coef(p, 1, false, -1); };
  } else if (which == 2) {
    table[0][0] = [](const K& p) { return five_point_coef(p, 2, true, 1); };
    table[1][0] = [](const K& p) { return five_point_coef(p, 2, true, 0); };
    table[2][0] = [](const K& p) { return five_point_coef(p, 2, true, -1); };
    table[0][1] = [](const K& p) { return five_point_coef(p, 2, false, 1); };
    table[1][1] = [](const K& p) { return five_point_coef(p, 2, false, 0); };
    table[2][1] = [](const K& p) { return five_point_coef(p, 2, false, -1); };
  } else {
    table[0][0] = [](const K& p) { return five_point_coef(p, 3, true, 1); };
    table[1][0] = [](const K& p) { return five_point_coef(p, 3, true, 0); };
    table[2][0] = [](const K& p) { return five_point_coef(p, 3, true, -1); };
    table[0][1] = [](const K& p) { return five_point_coef(p, 3, false, 1); };
    table[1][1] = [](const K& p) { return five_point_coef(p, 3, false, 0); };
    table[2][1] = [](const K& p) { return five_point_coef(p, 3, false, -1); };
  }
  const int ks[3] = {1, 0, -1};
  for (int i = 0; i < 3; ++i) {
    t.push_back({ParameterShift{.dn = ks[i]}, TermOp::value, table[i][0]});
    t.push_back({ParameterShift{.dm = ks[i]}, TermOp::value, table[i][1]});
  }
  return t;
}

template <Field T>
std::vector<Relation<T>> build_relation_catalog() {
  using K = KampeSpec<T>;
  using S = ParameterShift;
  constexpr auto STD = KampeForm::standard;
  constexpr auto REF = KampeForm::reflected;
  constexpr auto ONE = Evaluation::at_one;
  constexpr auto GEN = Evaluation::general;
  auto V = [](S s, Coefficient<T> c) { return RelationTerm<T>{s, TermOp::value, c}; };
  auto TX = [](Coefficient<T> c) { return RelationTerm<T>{S{}, TermOp::theta_x, c}; };
  auto TY = [](Coefficient<T> c) { return RelationTerm<T>{S{}, TermOp::theta_y, c}; };
  auto unit = [](const K& p) { return lift(1, p.mu); };
  auto neg_unit = [](const K& p) { return lift(-1, p.mu); };

  std::vector<Relation<T>> c;

  // Single-index contiguous relations inherited from the Jacobi identities, n side.
  c.push_back({"Rec1", STD, ONE, {
      V({}, [](const K& p) { return p.alpha + p.beta + p.n; }),
      V({.dbeta = -1}, [](const K& p) { return -(p.beta + p.n); }),
      V({.dalpha = -1}, [](const K& p) { return -(p.alpha + p.n); })}});
  c.push_back({"Rec2", STD, ONE, {
      V({.dalpha = 1, .dmu = 1}, [](const K& p) { return -(p.alpha + p.beta + (2 + 2 * p.n)) / 2; }),
      V({.dn = 1}, [](const K& p) { return lift(-(p.n + 1), p.mu); }),
      V({}, [](const K& p) { return p.alpha + (1 + p.n); })}});
  c.push_back({"Rec3", STD, ONE, {
      V({.dbeta = 1, .dnu = 1}, [](const K& p) { return (p.alpha + p.beta + (2 + 2 * p.n)) / 2; }),
      V({.dn = 1}, [](const K& p) { return lift(-(p.n + 1), p.mu); }),
      V({}, [](const K& p) { return -(p.beta + (1 + p.n)); })}});
  c.push_back({"Rec4", STD, ONE, {
      V({.dbeta = -1}, [](const K& p) { return p.alpha + p.beta + 2 * p.n; }),
      V({}, [](const K& p) { return -(p.alpha + p.beta + p.n); }),
      V({.dn = -1}, [](const K& p) { return -(p.alpha + p.n); })}});
  c.push_back({"Rec5", STD, ONE, {
      V({.dalpha = -1}, [](const K& p) { return p.alpha + p.beta + 2 * p.n; }),
      V({}, [](const K& p) { return -(p.alpha + p.beta + p.n); }),
      V({.dn = -1}, [](const K& p) { return p.beta + p.n; })}});
  c.push_back({"Rec6", STD, ONE, {
      V({}, [](const K& p) { return lift(2, p.mu); }),
      V({.dbeta = 1, .dnu = 1}, neg_unit),
      V({.dalpha = 1, .dmu = 1}, neg_unit)}});
  c.push_back({"Rec7", STD, ONE, {
      V({.dn = -1}, unit),
      V({.dbeta = -1}, neg_unit),
      V({.dalpha = -1}, unit)}});

  // m side.
  c.push_back({"Rec1_2", STD, ONE, {
      V({}, [](const K& p) { return p.rho + p.delta + p.m; }),
      V({.ddelta = -1}, [](const K& p) { return -(p.delta + p.m); }),
      V({.drho = -1}, [](const K& p) { return -(p.rho + p.m); })}});
  c.push_back({"Rec2_2", STD, ONE, {
      V({.drho = 1, .dmu = 1}, [](const K& p) { return -(p.rho + p.delta + (2 + 2 * p.m)) / 2; }),
      V({.dm = 1}, [](const K& p) { return lift(-(p.m + 1), p.mu); }),
      V({}, [](const K& p) { return p.rho + (1 + p.m); })}});
  c.push_back({"Rec3_2", STD, ONE, {
      V({.ddelta = 1, .dnu = 1}, [](const K& p) { return (p.rho + p.delta + (2 + 2 * p.m)) / 2; }),
      V({.dm = 1}, [](const K& p) { return lift(-(p.m + 1), p.mu); }),
      V({}, [](const K& p) { return -(p.delta + (1 + p.m)); })}});
  c.push_back({"Rec4_2", STD, ONE, {
      V({.ddelta = -1}, [](const K& p) { return p.rho + p.delta + 2 * p.m; }),
      V({}, [](const K& p) { return -(p.rho + p.delta + p.m); }),
      V({.dm = -1}, [](const K& p) { return -(p.rho + p.m); })}});
  c.push_back({"Rec5_2", STD, ONE, {
      V({.drho = -1}, [](const K& p) { return p.rho + p.delta + 2 * p.m; }),
      V({}, [](const K& p) { return -(p.rho + p.delta + p.m); }),
      V({.dm = -1}, [](const K& p) { return p.delta + p.m; })}});
  c.push_back({"Rec6_2", STD, ONE, {
      V({}, [](const K& p) { return lift(2, p.mu); }),
      V({.ddelta = 1, .dnu = 1}, neg_unit),
      V({.drho = 1, .dmu = 1}, neg_unit)}});
  c.push_back({"Rec7_2", STD, ONE, {
      V({.dm = -1}, unit),
      V({.ddelta = -1}, neg_unit),
      V({.drho = -1}, unit)}});

  c.push_back({"basicrec", STD, ONE, {
      V({}, [](const K& p) { return -2 * (p.alpha + (1 + p.n)); }),
      V({.dalpha = 1}, [](const K& p) { return -(p.beta + (1 + p.n)); }),
      V({.dalpha = 1, .dmu = 1}, [](const K& p) { return p.alpha + p.beta + (2 + 2 * p.n); }),
      V({.dn = 1}, [](const K& p) { return -(p.alpha + p.beta + 1); }),
      V({.dn = 1, .dalpha = 1}, [](const K& p) { return p.alpha + p.beta + (2 + p.n); })}});
  c.push_back({"munu", STD, ONE, {
      V({}, [](const K& p) { return lift(2, p.mu); }),
      V({.dnu = 1}, neg_unit),
      V({.dmu = 1}, neg_unit)}});

  // Two-index relations.
  c.push_back({"MixedRec1", STD, GEN, {
      V({.dn = 1, .dm = 1, .dnu = 1}, [](const K& p) { return p.mu + p.nu + (p.n + p.m + 4); }),
      V({.dm = 1, .dbeta = 1, .dnu = 1}, [](const K& p) { return -(p.alpha + (p.n + 1)); }),
      V({.dn = 1, .ddelta = 1, .dnu = 1}, [](const K& p) { return -(p.rho + (p.m + 1)); }),
      V({.dn = 1, .dm = 1}, [](const K& p) { return -2 * (p.nu + 1); })}});
  c.push_back({"MixedRec2", STD, GEN, {
      V({}, [](const K& p) { return p.alpha + p.beta + p.rho + p.delta - p.mu - p.nu + (p.n + p.m + 1); }),
      V({.dbeta = 1}, [](const K& p) { return -(p.alpha + p.beta + (p.n + 1)); }),
      V({.ddelta = 1}, [](const K& p) { return -(p.rho + p.delta + (p.m + 1)); }),
      V({.dnu = -1}, [](const K& p) { return 2 * p.nu; })}});
  c.push_back({"MixedRec3", REF, GEN, {
      V({.dn = 1, .dm = 1, .dmu = 1}, [](const K& p) { return p.mu + p.nu + (p.n + p.m + 4); }),
      V({.dm = 1, .dalpha = 1, .dmu = 1}, [](const K& p) { return p.beta + (p.n + 1); }),
      V({.dn = 1, .drho = 1, .dmu = 1}, [](const K& p) { return p.delta + (p.m + 1); }),
      V({.dn = 1, .dm = 1}, [](const K& p) { return -2 * (p.mu + 1); })}});
  c.push_back({"MixedRec4", REF, GEN, {
      V({}, [](const K& p) { return p.alpha + p.beta + p.rho + p.delta - p.mu - p.nu + (p.n + p.m + 1); }),
      V({.dalpha = 1}, [](const K& p) { return -(p.alpha + p.beta + (p.n + 1)); }),
      V({.drho = 1}, [](const K& p) { return -(p.rho + p.delta + (p.m + 1)); }),
      V({.dmu = -1}, [](const K& p) { return 2 * p.mu; })}});
  c.push_back({"Mixed1", STD, ONE, {
      V({.dn = 1, .dalpha = -1}, [](const K& p) { return (p.rho + p.delta + (2 * p.m + 1)) * (p.n + 1); }),
      V({.dalpha = -1}, [](const K& p) { return -((p.rho + p.delta + (2 * p.m + 1)) * (p.alpha + p.n)); }),
      V({.dm = 1, .drho = -1}, [](const K& p) { return -((p.alpha + p.beta + (2 * p.n + 1)) * (p.m + 1)); }),
      V({.drho = -1}, [](const K& p) { return (p.alpha + p.beta + (2 * p.n + 1)) * (p.rho + p.m); })}});
  c.push_back({"Mixed2", STD, ONE, {
      V({.dn = 1, .dbeta = -1}, [](const K& p) { return (p.rho + p.delta + (2 * p.m + 1)) * (p.n + 1); }),
      V({.dbeta = -1}, [](const K& p) { return (p.rho + p.delta + (2 * p.m + 1)) * (p.beta + p.n); }),
      V({.dm = 1, .ddelta = -1}, [](const K& p) { return -((p.alpha + p.beta + (2 * p.n + 1)) * (p.m + 1)); }),
      V({.ddelta = -1}, [](const K& p) { return -((p.alpha + p.beta + (2 * p.n + 1)) * (p.delta + p.m)); })}});
  c.push_back({"Mixed5Point", STD, ONE, five_point_terms<T>(1)});
  c.push_back({"Mixed5Point2", STD, ONE, five_point_terms<T>(2)});
  c.push_back({"Mixed5Point3", STD, ONE, five_point_terms<T>(3)});

  // nu-raising, mu-raising and the main eight-term relation.
  c.push_back({"recnu", STD, ONE, {
      V({.dn = 1, .dm = 1, .dnu = 1}, [](const K& p) { return (p.alpha + p.beta + (p.n + 1)) * (p.rho + p.delta + (p.m + 1)) * (p.mu + p.nu + (p.n + p.m + 4)); }),
      V({.dn = 1, .dm = 1}, [](const K& p) { return -((p.alpha + p.beta + (p.n + 1)) * (p.rho + p.delta + (p.m + 1)) * 2 * (p.nu + 1)); }),
      V({.dm = 1, .dnu = 1}, [](const K& p) { return -((p.alpha + (p.n + 1)) * (p.rho + p.delta + (p.m + 1)) * (p.alpha + p.beta - p.mu - p.nu + (p.n - p.m - 2))); }),
      V({.dm = 1}, [](const K& p) { return -((p.alpha + (p.n + 1)) * (p.rho + p.delta + (p.m + 1)) * 2 * (p.nu + 1)); }),
      V({.dn = 1, .dnu = 1}, [](const K& p) { return -((p.rho + (p.m + 1)) * (p.alpha + p.beta + (p.n + 1)) * (p.rho + p.delta - p.mu - p.nu + (p.m - p.n - 2))); }),
      V({.dn = 1}, [](const K& p) { return -((p.rho + (p.m + 1)) * (p.alpha + p.beta + (p.n + 1)) * 2 * (p.nu + 1)); }),
      V({.dnu = 1}, [](const K& p) { return -((p.rho + (p.m + 1)) * (p.alpha + (p.n + 1)) * (p.alpha + p.beta + p.rho + p.delta - p.mu - p.nu + (p.n + p.m))); }),
      V({}, [](const K& p) { return -((p.rho + (p.m + 1)) * (p.alpha + (p.n + 1)) * 2 * (p.nu + 1)); })}});
  c.push_back({"recmu", STD, ONE, {
      V({.dn = 1, .dm = 1, .dmu = 1}, [](const K& p) { return (p.alpha + p.beta + (p.n + 1)) * (p.rho + p.delta + (p.m + 1)) * (p.mu + p.nu + (p.n + p.m + 4)); }),
      V({.dn = 1, .dm = 1}, [](const K& p) { return -((p.alpha + p.beta + (p.n + 1)) * (p.rho + p.delta + (p.m + 1)) * 2 * (p.mu + 1)); }),
      V({.dm = 1, .dmu = 1}, [](const K& p) { return (p.beta + (p.n + 1)) * (p.rho + p.delta + (p.m + 1)) * (p.alpha + p.beta - p.mu - p.nu + (p.n - p.m - 2)); }),
      V({.dm = 1}, [](const K& p) { return (p.beta + (p.n + 1)) * (p.rho + p.delta + (p.m + 1)) * 2 * (p.mu + 1); }),
      V({.dn = 1, .dmu = 1}, [](const K& p) { return (p.delta + (p.m + 1)) * (p.alpha + p.beta + (p.n + 1)) * (p.rho + p.delta - p.mu - p.nu + (p.m - p.n - 2)); }),
      V({.dn = 1}, [](const K& p) { return (p.delta + (p.m + 1)) * (p.alpha + p.beta + (p.n + 1)) * 2 * (p.mu + 1); }),
      V({.dmu = 1}, [](const K& p) { return -((p.delta + (p.m + 1)) * (p.beta + (p.n + 1)) * (p.alpha + p.beta + p.rho + p.delta - p.mu - p.nu + (p.n + p.m))); }),
      V({}, [](const K& p) { return -((p.delta + (p.m + 1)) * (p.beta + (p.n + 1)) * 2 * (p.mu + 1)); })}});
  c.push_back({"HardRec", STD, ONE, {
      V({.dn = 1, .dm = 1, .dnu = 1}, [](const K& p) { return lift((p.n + 1) * (p.m + 1), p.mu) * (p.mu + p.nu + (p.n + p.m + 4)); }),
      V({.dn = 1, .dm = 1}, [](const K& p) { return -(lift((p.n + 1) * (p.m + 1), p.mu) * 2 * (p.nu + 1 - p.beta - p.delta)); }),
      V({.dm = 1, .dnu = 1}, [](const K& p) { return -((p.beta + (p.n + 1)) * (p.m + 1) * (p.alpha + p.beta - p.mu - p.nu + (p.n - p.m - 2))); }),
      V({.dm = 1}, [](const K& p) { return -((p.beta + (p.n + 1)) * (p.m + 1) * 2 * (p.nu + 1 - p.beta - p.delta)); }),
      V({.dn = 1, .dnu = 1}, [](const K& p) { return -((p.delta + (p.m + 1)) * (p.n + 1) * (p.rho + p.delta - p.mu - p.nu + (p.m - p.n - 2))); }),
      V({.dn = 1}, [](const K& p) { return -((p.delta + (p.m + 1)) * (p.n + 1) * 2 * (p.nu + 1 - p.beta - p.delta)); }),
      V({.dnu = 1}, [](const K& p) { return -((p.beta + (p.n + 1)) * (p.delta + (p.m + 1)) * (p.alpha + p.beta + p.rho + p.delta - p.mu - p.nu + (p.n + p.m))); }),
      V({}, [](const K& p) { return -((p.beta + (p.n + 1)) * (p.delta + (p.m + 1)) * 2 * (p.nu + 1 - p.beta - p.delta)); })}});
  {
    Relation<T> r{"folg4p13", STD, ONE, {
        V({.dn = 1, .dm = 1, .dnu = 1}, [](const K& p) { return lift((p.n + 1) * (p.m + 1), p.mu) * (p.mu + p.nu + (p.n + p.m + 4)); }),
        V({.dm = 1, .dnu = 1}, [](const K& p) { return -((p.beta + (p.n + 1)) * (p.m + 1) * (p.alpha + p.beta - p.mu - p.nu + (p.n - p.m - 2))); }),
        V({.dn = 1, .dnu = 1}, [](const K& p) { return -((p.delta + (p.m + 1)) * (p.n + 1) * (p.rho + p.delta - p.mu - p.nu + (p.m - p.n - 2))); }),
        V({.dnu = 1}, [](const K& p) { return -((p.beta + (p.n + 1)) * (p.delta + (p.m + 1)) * (p.alpha + p.rho - p.mu + (p.n + p.m + 1))); })}};
    r.constraint = [](const K& p) { return p.nu + 1 == p.beta + p.delta; };
    r.project = [](K& p) {  // keep nu integral so exact Beta values stay available
      p.delta = p.nu + 1 - p.beta;
      if (p.delta < lift(0, p.delta)) {
        p.nu = p.nu + 2;
        p.delta = p.delta + 2;
      }
    };
    c.push_back(std::move(r));
  }
  {
    Relation<T> r{"EasyRec", STD, ONE, {
        V({.dn = 1, .dm = 1}, [](const K& p) { return lift(p.m + p.n + 3, p.mu); }),
        V({.dn = 1}, [](const K& p) { return -(p.alpha + (p.m - p.n - 1)); }),
        V({.dm = 1}, [](const K& p) { return -(p.alpha + (p.n - p.m - 1)); }),
        V({}, [](const K& p) { return -(2 * p.alpha + (p.m + p.n + 1)); })}};
    r.constraint = [](const K& p) {
      return p.rho == p.alpha && is_zero(p.beta) && is_zero(p.delta) && is_zero(p.mu) && is_zero(p.nu);
    };
    r.project = [](K& p) {
      p.rho = p.alpha;
      p.beta = p.delta = p.mu = p.nu = lift(0, p.mu);
    };
    c.push_back(std::move(r));
  }

  // Differential relations, exact through the termwise Euler operator.
  c.push_back({"dx1", STD, GEN, {
      TX(unit), V({}, [](const K& p) { return lift(-p.n, p.mu); }),
      V({.dn = -1, .dbeta = 1}, [](const K& p) { return p.alpha + p.n; })}});
  c.push_back({"dx2", STD, GEN, {
      TX(unit), V({}, [](const K& p) { return p.alpha + p.beta + (p.n + 1); }),
      V({.dbeta = 1}, [](const K& p) { return -(p.alpha + p.beta + (p.n + 1)); })}});
  c.push_back({"dy1", STD, GEN, {
      TY(unit), V({}, [](const K& p) { return lift(-p.m, p.mu); }),
      V({.dm = -1, .ddelta = 1}, [](const K& p) { return p.rho + p.m; })}});
  c.push_back({"dy2", STD, GEN, {
      TY(unit), V({}, [](const K& p) { return p.rho + p.delta + (p.m + 1); }),
      V({.ddelta = 1}, [](const K& p) { return -(p.rho + p.delta + (p.m + 1)); })}});
  c.push_back({"dxdy", STD, GEN, {
      TX(unit), TY(unit), V({}, [](const K& p) { return p.mu + p.nu + 1; }),
      V({.dnu = -1}, [](const K& p) { return -2 * p.nu; })}});
  c.push_back({"dx3", REF, GEN, {
      TX(unit), V({}, [](const K& p) { return lift(-p.n, p.mu); }),
      V({.dn = -1, .dalpha = 1}, [](const K& p) { return -(p.beta + p.n); })}});
  c.push_back({"dx4", REF, GEN, {
      TX(unit), V({}, [](const K& p) { return p.alpha + p.beta + (p.n + 1); }),
      V({.dalpha = 1}, [](const K& p) { return -(p.alpha + p.beta + (p.n + 1)); })}});
  c.push_back({"dy3", REF, GEN, {
      TY(unit), V({}, [](const K& p) { return lift(-p.m, p.mu); }),
      V({.dm = -1, .drho = 1}, [](const K& p) { return -(p.delta + p.m); })}});
  c.push_back({"dy4", REF, GEN, {
      TY(unit), V({}, [](const K& p) { return p.rho + p.delta + (p.m + 1); }),
      V({.drho = 1}, [](const K& p) { return -(p.rho + p.delta + (p.m + 1)); })}});
  c.push_back({"dxdy2", REF, GEN, {
      TX(unit), TY(unit), V({}, [](const K& p) { return p.mu + p.nu + 1; }),
      V({.dmu = -1}, [](const K& p) { return -2 * p.mu; })}});
  return c;
}

}  // namespace detail

// Immutable catalog, one instance per field type.
template <Field T>
const std::vector<Relation<T>>& relation_catalog() {
  static const std::vector<Relation<T>> catalog = detail::build_relation_catalog<T>();
  return catalog;
}

template <Field T>
const Relation<T>& find_relation(std::string_view id) {
  for (const auto& r : relation_catalog<T>()) {
    if (r.id == id) return r;
  }
  throw std::invalid_argument("unknown relation id '" + std::string(id) + "'");
}

// The spec with the relation's form and, for x=y=1 relations, unit arguments.
template <Field T>
KampeSpec<T> relation_spec(const Relation<T>& rel, KampeSpec<T> spec) {
  spec.form = rel.form;
  if (rel.evaluation == Evaluation::at_one) spec.x = spec.y = lift(1, spec.mu);
  return spec;
}

// In regime: the extra constraint holds and every shifted series is valid.
template <Field T>
bool relation_in_regime(const Relation<T>& rel, const KampeSpec<T>& spec) {
  const KampeSpec<T> s = relation_spec(rel, spec);
  if (rel.constraint && !rel.constraint(s)) return false;
  for (const auto& t : rel.terms) {
    if (!kampe_valid(apply_shift(s, t.shift))) return false;
  }
  return true;
}

template <Field T>
T relation_residual(const Relation<T>& rel, const KampeSpec<T>& spec) {
  if (!relation_in_regime(rel, spec)) throw DomainError("relation_residual: spec outside the regime of " + rel.id);
  const KampeSpec<T> s = relation_spec(rel, spec);
  T sum = lift(0, s.mu);
  for (const auto& t : rel.terms) {
    const T c = t.coef(s);
    if (is_zero(c)) continue;
    const KampeSpec<T> shifted = apply_shift(s, t.shift);
    switch (t.op) {
      case TermOp::value: sum += c * kampe_eval(shifted); break;
      case TermOp::theta_x: sum += c * euler_theta(shifted, Axis::x); break;
      case TermOp::theta_y: sum += c * euler_theta(shifted, Axis::y); break;
    }
  }
  return sum;
}

template <Field T>
T relation_residual(std::string_view id, const KampeSpec<T>& spec) {
  return relation_residual(find_relation<T>(id), spec);
}

}  // namespace jacrec
