#include "jacrec/integrals.hpp"

namespace jacrec {

std::array<long, 8> triple_coefficients(IntegralKind kind, long i, long j, long a, long n, long m) {
  const long lead = 2 + a + i + j + m + n;
  if (kind == IntegralKind::plain) {
    return {lead,
            -(2 - a - i - j - m - n),
            -(2 + a - i - j - m - n),
            -2 + a + i - j - m + n,
            -(2 + a - i + j + m - n),
            -2 + a - i + j + m - n,
            -(2 + a + i - j - m + n),
            -2 + a - i - j - m - n};
  }
  return {lead,
          -(6 - a - i - j - m - n),
          -(6 + a - i - j - m - n),
          -4 + a + i - j - m + n,
          -(4 + a - i + j + m - n),
          -4 + a - i + j + m - n,
          -(4 + a + i - j - m + n),
          -2 + a - i - j - m - n};
}

}  // namespace jacrec
