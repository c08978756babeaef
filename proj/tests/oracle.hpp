#pragma once

// Test-only numerical oracles. Nothing here calls into the library's
// quadrature, so agreement between the two is an independent check.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

namespace swmac::oracle {

/// n-point Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(std::size_t n) {
  std::vector<double> x(n), w(n);
  for (std::size_t i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

/// Composite Gauss-Legendre with `panels` equal panels of `order` points.
template <class F>
double composite(F&& f, double a, double b, std::size_t panels = 64, std::size_t order = 20) {
  static const auto rule = gauss_legendre(20);
  const auto& [x, w] = order == 20 ? rule : gauss_legendre(order);
  const double h = (b - a) / static_cast<double>(panels);
  double sum = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + h * static_cast<double>(p);
    double part = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) part += w[i] * f(lo + 0.5 * h * (x[i] + 1.0));
    sum += 0.5 * h * part;
  }
  return sum;
}

/// Tensor-product composite rule on [a1,b1] x [a2,b2].
template <class F>
double composite_2d(F&& f, double a1, double b1, double a2, double b2, std::size_t panels = 32) {
  return composite([&](double x) { return composite([&](double y) { return f(x, y); }, a2, b2, panels); }, a1, b1,
                   panels);
}

}  // namespace swmac::oracle
