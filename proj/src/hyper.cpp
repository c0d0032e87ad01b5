#include "jacrec/hyper.hpp"

#include <cmath>

namespace jacrec::detail {

double gamma_checked(double x) {
  if (x <= 0 && std::floor(x) == x) throw PoleError("gamma: pole at a nonpositive integer");
  const double g = std::tgamma(x);
  if (!std::isfinite(g)) throw EvaluationError("gamma: overflow");
  return g;
}

}  // namespace jacrec::detail
