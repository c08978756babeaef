#pragma once

#include <algorithm>
#include <cmath>

namespace swmac::detail {

// Both roots share the discriminant (1+a)^2 - 4av = (1-a)^2 + 4a(1-v).
// Picking the form whose terms have the same sign avoids cancellation.
// Roots are clamped to 1 to absorb the last rounding step.
inline double fgm_discriminant(double a, double v, double sv) noexcept {
  const double d = a < 0.0 ? (1.0 + a) * (1.0 + a) - 4.0 * a * v : (1.0 - a) * (1.0 - a) + 4.0 * a * sv;
  return std::max(d, 0.0);
}

inline double fgm_inverse_root(double a, double v) noexcept {
  if (v == 0.0) return 0.0;  // a = -1 would give 0/0
  return std::min((2.0 * v) / ((1.0 + a) + std::sqrt(fgm_discriminant(a, v, 1.0 - v))), 1.0);
}

inline double fgm_inverse_survival(double a, double sv) noexcept {
  if (sv == 0.0) return 0.0;  // a = 1 would give 0/0
  return std::min((2.0 * sv) / ((1.0 - a) + std::sqrt(fgm_discriminant(a, 1.0 - sv, sv))), 1.0);
}

}  // namespace swmac::detail
