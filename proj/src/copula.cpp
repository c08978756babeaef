#include "swmac/copula.hpp"

#include <cmath>
#include <string>

#include "swmac/errors.hpp"

namespace swmac {

DependenceParameter::DependenceParameter(double theta) : theta_(theta) {
  if (!(theta >= -1.0 && theta <= 1.0)) {
    throw InvalidArgument("dependence parameter theta must lie in [-1, 1], got " + std::to_string(theta));
  }
}

FadingMarginals::FadingMarginals(double lambda1, double lambda2) : lambda1_(lambda1), lambda2_(lambda2) {
  if (!(lambda1 > 0.0 && std::isfinite(lambda1)) || !(lambda2 > 0.0 && std::isfinite(lambda2))) {
    throw InvalidArgument("fading rates must be positive and finite");
  }
}

FadingMarginals FadingMarginals::from_sigma_sq(double sigma1_sq, double sigma2_sq) {
  if (!(sigma1_sq > 0.0) || !(sigma2_sq > 0.0)) throw InvalidArgument("sigma^2 must be positive");
  return FadingMarginals(1.0 / (2.0 * sigma1_sq), 1.0 / (2.0 * sigma2_sq));
}

UnitPair make_unit_pair(double u1, double u2) {
  if (!(u1 >= 0.0 && u1 <= 1.0) || !(u2 >= 0.0 && u2 <= 1.0)) {
    throw InvalidArgument("unit pair coordinates must lie in [0, 1]");
  }
  return {u1, u2};
}

GainPair make_gain_pair(double g1, double g2) {
  if (!(g1 >= 0.0) || !(g2 >= 0.0)) throw InvalidArgument("power gains must be nonnegative");
  return {g1, g2};
}

double copula_cdf(DependenceParameter theta, UnitPair u) noexcept {
  return u.u1 * u.u2 * (1.0 + theta.value() * (1.0 - u.u1) * (1.0 - u.u2));
}

double copula_density(DependenceParameter theta, UnitPair u) noexcept {
  return 1.0 + theta.value() * (1.0 - 2.0 * u.u1) * (1.0 - 2.0 * u.u2);
}

double conditional_cdf(DependenceParameter theta, double u1, double u2) noexcept {
  return u2 * (1.0 + theta.value() * (1.0 - 2.0 * u1) * (1.0 - u2));
}

UnitPair sample_unit_pair(DependenceParameter theta, CounterStream& stream) noexcept {
  const double u1 = stream.next_unit();
  const double v = stream.next_unit();
  const double a = theta.value() * (1.0 - 2.0 * u1);
  return {u1, detail::fgm_inverse_root(a, v)};
}

GainPair sample_gain_pair(DependenceParameter theta, const FadingMarginals& marginals,
                          CounterStream& stream) noexcept {
  const double u1 = stream.next_unit();
  const double v = stream.next_unit();
  const double s1 = 1.0 - u1;
  const double a = theta.value() * (1.0 - 2.0 * (1.0 - s1));
  const double w = detail::fgm_inverse_survival(a, 1.0 - v);
  return {-std::log(s1) / marginals.lambda1(), -std::log(w) / marginals.lambda2()};
}

double joint_gain_cdf(DependenceParameter theta, const FadingMarginals& marginals, GainPair g) noexcept {
  const double f1 = -std::expm1(-marginals.lambda1() * g.g1);
  const double f2 = -std::expm1(-marginals.lambda2() * g.g2);
  return copula_cdf(theta, {f1, f2});
}

double joint_gain_pdf(DependenceParameter theta, const FadingMarginals& marginals, GainPair g) noexcept {
  const double e1 = std::exp(-marginals.lambda1() * g.g1);
  const double e2 = std::exp(-marginals.lambda2() * g.g2);
  return marginals.lambda1() * marginals.lambda2() * e1 * e2 *
         (1.0 + theta.value() * (2.0 * e1 - 1.0) * (2.0 * e2 - 1.0));
}

}  // namespace swmac
