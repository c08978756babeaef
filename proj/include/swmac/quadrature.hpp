#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cstddef>
#include <functional>
#include <queue>
#include <vector>

namespace swmac {

struct QuadratureResult {
  double value;
  double error;
  std::size_t panels;
  bool converged;
};

/// Globally adaptive 61-point Gauss-Kronrod on [a, b]: the panel with the
/// largest error estimate is bisected until the summed estimate is at most
/// abs_tol or max_panels is reached (converged = false).
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol, std::size_t max_panels = 4096) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 61>;
  struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
  };
  auto evaluate = [&](double lo, double hi) {
    double err = 0.0;
    const double v = Rule::integrate(f, lo, hi, 0, 0.0, &err);
    return Panel{lo, hi, v, err};
  };

  std::priority_queue<Panel> panels;
  panels.push(evaluate(a, b));
  double value = panels.top().value;
  double error = panels.top().error;
  while (error > abs_tol && panels.size() < max_panels) {
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // panel at machine resolution
    panels.pop();
    const Panel left = evaluate(worst.a, mid);
    const Panel right = evaluate(mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  // Re-sum to drop the drift of the running updates.
  value = 0.0;
  error = 0.0;
  const std::size_t count = panels.size();
  for (; !panels.empty(); panels.pop()) {
    value += panels.top().value;
    error += panels.top().error;
  }
  return {value, error, count, error <= abs_tol};
}

}  // namespace swmac
