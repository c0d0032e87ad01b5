#include "jacrec/scalar.hpp"

#include <cmath>
#include <cstdio>

#include "jacrec/errors.hpp"

namespace jacrec {

namespace {

double checked(double d) {
  if (!std::isfinite(d)) throw EvaluationError("non-finite float scalar");
  return d;
}

void require_same(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) throw MixedModeError("mixed exact/float scalar arithmetic");
}

}  // namespace

Scalar::Scalar(double d) : v_(checked(d)) {}

Scalar Scalar::from_int(long v, Mode mode) {
  return mode == Mode::exact ? Scalar(Rational(v)) : Scalar(static_cast<double>(v));
}

Scalar Scalar::from_ratio(long num, long den, Mode mode) {
  return mode == Mode::exact ? Scalar(Rational(num, den))
                             : Scalar(static_cast<double>(num) / static_cast<double>(den));
}

const Rational& Scalar::rational() const {
  if (!exact()) throw MixedModeError("float scalar used where an exact value is required");
  return std::get<Rational>(v_);
}

double Scalar::to_double() const {
  return exact() ? std::get<Rational>(v_).to_double() : std::get<double>(v_);
}

bool Scalar::is_integer() const {
  if (exact()) return std::get<Rational>(v_).is_integer();
  const double d = std::get<double>(v_);
  return std::floor(d) == d;
}

bool Scalar::is_zero() const {
  return exact() ? std::get<Rational>(v_).is_zero() : std::get<double>(v_) == 0.0;
}

std::string Scalar::str() const {
  if (exact()) return std::get<Rational>(v_).str();
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v_));
  return buf;
}

#define JACREC_SCALAR_OP(op)                                              \
  Scalar& Scalar::operator op## =(const Scalar& o) {                      \
    require_same(*this, o);                                               \
    if (exact()) {                                                        \
      std::get<Rational>(v_) op## = std::get<Rational>(o.v_);             \
    } else {                                                              \
      v_ = checked(std::get<double>(v_) op std::get<double>(o.v_));       \
    }                                                                     \
    return *this;                                                         \
  }

JACREC_SCALAR_OP(+)
JACREC_SCALAR_OP(-)
JACREC_SCALAR_OP(*)
JACREC_SCALAR_OP(/)
#undef JACREC_SCALAR_OP

Scalar operator-(const Scalar& a) {
  return a.exact() ? Scalar(-std::get<Rational>(a.v_)) : Scalar(-std::get<double>(a.v_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return a.exact() ? std::get<Rational>(a.v_) == std::get<Rational>(b.v_)
                   : std::get<double>(a.v_) == std::get<double>(b.v_);
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.exact()) return std::get<Rational>(a.v_) <=> std::get<Rational>(b.v_);
  return std::get<double>(a.v_) <=> std::get<double>(b.v_);
}

}  // namespace jacrec
