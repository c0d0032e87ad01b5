#pragma once

#include <compare>
#include <concepts>
#include <string>
#include <variant>

#include "jacrec/rational.hpp"

namespace jacrec {

enum class Mode { exact, float64 };

// Field element tagged with its arithmetic mode. Mixing modes throws MixedModeError;
// a NaN or infinite float result throws EvaluationError.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(double d);
  template <std::integral I>
  Scalar(I) = delete;  // pick a mode explicitly via from_int

  static Scalar from_int(long v, Mode mode);
  static Scalar from_ratio(long num, long den, Mode mode);

  Mode mode() const { return v_.index() == 0 ? Mode::exact : Mode::float64; }
  bool exact() const { return mode() == Mode::exact; }
  const Rational& rational() const;  // throws unless exact
  double to_double() const;
  bool is_integer() const;
  bool is_zero() const;
  std::string str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  // Integer operands adopt the mode of the scalar.
  Scalar& operator+=(long k) { return *this += like(k); }
  Scalar& operator-=(long k) { return *this -= like(k); }
  Scalar& operator*=(long k) { return *this *= like(k); }
  Scalar& operator/=(long k) { return *this /= like(k); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator+(Scalar a, long k) { return a += k; }
  friend Scalar operator-(Scalar a, long k) { return a -= k; }
  friend Scalar operator*(Scalar a, long k) { return a *= k; }
  friend Scalar operator/(Scalar a, long k) { return a /= k; }
  friend Scalar operator+(long k, const Scalar& a) { return a.like(k) + a; }
  friend Scalar operator-(long k, const Scalar& a) { return a.like(k) - a; }
  friend Scalar operator*(long k, const Scalar& a) { return a.like(k) * a; }
  friend Scalar operator/(long k, const Scalar& a) { return a.like(k) / a; }
  friend Scalar operator-(const Scalar& a);

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, long k) { return a == a.like(k); }
  friend std::partial_ordering operator<=>(const Scalar& a, long k) { return a <=> a.like(k); }

  Scalar like(long k) const { return from_int(k, mode()); }

 private:
  std::variant<Rational, double> v_;
};

}  // namespace jacrec
