#pragma once

#include <cmath>
#include <concepts>
#include <cstdio>
#include <optional>
#include <string>
#include <type_traits>

#include "jacrec/errors.hpp"
#include "jacrec/rational.hpp"
#include "jacrec/scalar.hpp"

namespace jacrec {

// The three supported field types: exact Rational, binary64, and the runtime-tagged Scalar.
template <class T>
concept Field = std::same_as<T, double> || std::same_as<T, Rational> || std::same_as<T, Scalar>;

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.to_double(); }
inline double to_double(const Scalar& v) { return v.to_double(); }

// Integer constant in the arithmetic mode of `like`.
template <Field T>
T lift(long v, const T& like) {
  if constexpr (std::same_as<T, Scalar>) {
    return like.like(v);
  } else {
    (void)like;
    return T(v);
  }
}

template <Field T>
T lift_ratio(long num, long den, const T& like) {
  if constexpr (std::same_as<T, double>) {
    (void)like;
    return static_cast<double>(num) / static_cast<double>(den);
  } else if constexpr (std::same_as<T, Rational>) {
    (void)like;
    return Rational(num, den);
  } else {
    return Scalar::from_ratio(num, den, like.mode());
  }
}

// A float value in the mode of `like`; exact modes refuse it.
template <Field T>
T from_double(double d, const T& like) {
  if constexpr (std::same_as<T, double>) {
    (void)like;
    return d;
  } else if constexpr (std::same_as<T, Rational>) {
    (void)like;
    (void)d;
    throw DomainError("float value requested in exact mode");
  } else {
    if (like.exact()) throw DomainError("float value requested in exact mode");
    return Scalar(d);
  }
}

template <Field T>
bool is_exact(const T& v) {
  if constexpr (std::same_as<T, double>) {
    (void)v;
    return false;
  } else if constexpr (std::same_as<T, Rational>) {
    (void)v;
    return true;
  } else {
    return v.exact();
  }
}

template <Field T>
bool is_zero(const T& v) {
  if constexpr (std::same_as<T, double>) {
    return v == 0.0;
  } else {
    return v.is_zero();
  }
}

template <Field T>
bool is_integer_value(const T& v) {
  if constexpr (std::same_as<T, double>) {
    return std::isfinite(v) && std::floor(v) == v;
  } else {
    return v.is_integer();
  }
}

// The value as a long when it is an integer that fits.
template <Field T>
std::optional<long> as_integer(const T& v) {
  if (!is_integer_value(v)) return std::nullopt;
  const double d = to_double(v);
  if (std::fabs(d) > 1e15) return std::nullopt;
  return static_cast<long>(std::llround(d));
}

// Nonpositive integer test, used for termination and pole detection.
template <Field T>
bool is_nonpositive_integer(const T& v) {
  const auto k = as_integer(v);
  return k && *k <= 0;
}

template <Field T>
T abs_value(const T& v) {
  return v < lift(0, v) ? -v : v;
}

template <Field T>
std::string to_string(const T& v) {
  if constexpr (std::same_as<T, double>) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  } else {
    return v.str();
  }
}

}  // namespace jacrec
