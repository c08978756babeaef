#pragma once

// Farlie-Gumbel-Morgenstern copula and its composition with exponential
// (squared-Rayleigh) fading marginals.

#include <cstdint>

#include "swmac/random.hpp"

namespace swmac {

/// FGM dependence parameter, theta in [-1, 1].
class DependenceParameter {
 public:
  explicit DependenceParameter(double theta);
  double value() const noexcept { return theta_; }

 private:
  double theta_;
};

struct UnitPair {
  double u1;
  double u2;
};

/// Exponential rates of the two squared fading magnitudes.
class FadingMarginals {
 public:
  FadingMarginals(double lambda1, double lambda2);
  /// lambda_i = 1 / (2 sigma_i^2).
  static FadingMarginals from_sigma_sq(double sigma1_sq, double sigma2_sq);

  double lambda1() const noexcept { return lambda1_; }
  double lambda2() const noexcept { return lambda2_; }

 private:
  double lambda1_;
  double lambda2_;
};

/// Power gains g_i = |h_i|^2.
struct GainPair {
  double g1;
  double g2;
};

/// Validates u in [0,1]^2.
UnitPair make_unit_pair(double u1, double u2);
/// Validates g >= 0 componentwise.
GainPair make_gain_pair(double g1, double g2);

double copula_cdf(DependenceParameter theta, UnitPair u) noexcept;
double copula_density(DependenceParameter theta, UnitPair u) noexcept;
/// dC/du1 evaluated at (u1, u2): the CDF of U2 given U1 = u1.
double conditional_cdf(DependenceParameter theta, double u1, double u2) noexcept;

namespace detail {

// Shared by the library sampler and every simulation kernel so that all
// paths invert the conditional CDF identically.

/// Root in [0,1] of a*x^2 - (1+a)*x + v = 0, written without cancellation.
inline double fgm_inverse_root(double a, double v) noexcept;
/// Root in (0,1] of a*w^2 + (1-a)*w - sv = 0, i.e. 1 - u2 given sv = 1 - v.
inline double fgm_inverse_survival(double a, double sv) noexcept;

}  // namespace detail

/// Conditional inversion: u1 ~ U(0,1), v ~ U(0,1), u2 = C_{2|1}^{-1}(v | u1).
/// Consumes exactly two stream values.
UnitPair sample_unit_pair(DependenceParameter theta, CounterStream& stream) noexcept;

/// Same two stream values as sample_unit_pair, pushed through the
/// exponential inverse CDFs.
GainPair sample_gain_pair(DependenceParameter theta, const FadingMarginals& marginals,
                          CounterStream& stream) noexcept;

double joint_gain_cdf(DependenceParameter theta, const FadingMarginals& marginals, GainPair g) noexcept;
double joint_gain_pdf(DependenceParameter theta, const FadingMarginals& marginals, GainPair g) noexcept;

}  // namespace swmac

#include "swmac/detail/fgm_inverse.inl"
