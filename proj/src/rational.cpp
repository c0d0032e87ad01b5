#include "jacrec/rational.hpp"

#include <string>

#include "jacrec/errors.hpp"

namespace jacrec {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  mpq_class q;
  const std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0) throw DomainError("cannot parse rational '" + s + "'");
  if (q.get_den() == 0) throw DomainError("rational with zero denominator");
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace jacrec
