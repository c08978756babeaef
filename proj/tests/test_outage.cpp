#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracle.hpp"
#include "swmac/errors.hpp"
#include "swmac/kernels.hpp"
#include "swmac/outage.hpp"

using namespace swmac;

namespace {

// With P0 = 0 and R = 1/2, gamma = N exactly and A = P1, B = P2.
OutageQuery query_for(double theta, double l1, double l2, double a, double b, double gamma) {
  return {0.5, PowerBudget(0.0, a, b, gamma), FadingMarginals(l1, l2), DependenceParameter(theta)};
}

// Brute-force P[A g1 + B g2 <= gamma]: nested composite Gauss-Legendre of the
// joint density over the triangle, evaluated directly from the formula.
double brute_force_outage(double theta, double l1, double l2, double a, double b, double gamma) {
  auto pdf = [&](double x, double y) {
    const double e1 = std::exp(-l1 * x), e2 = std::exp(-l2 * y);
    return l1 * l2 * e1 * e2 * (1.0 + theta * (2.0 * e1 - 1.0) * (2.0 * e2 - 1.0));
  };
  return oracle::composite(
      [&](double y) { return oracle::composite([&](double x) { return pdf(x, y); }, 0.0, (gamma - b * y) / a, 16); },
      0.0, gamma / b, 16);
}

// Exact theta = 0 outage by convolution of two weighted exponentials.
double independent_outage(double l1, double l2, double a, double b, double gamma) {
  const double p = b / a;
  return 1.0 - (l2 * std::exp(-l1 * gamma / a) - l1 * p * std::exp(-l2 * gamma / b)) / (l2 - l1 * p);
}

struct FrozenCase {
  double theta, l1, l2, a, b, gamma, expected;
};

// 30-digit reference values from tests/oracles/outage_oracle.py (mpmath 2-D
// quadrature of the joint density over the triangle).
const std::vector<FrozenCase> kFrozen{
    {0.5, 1, 1, 1, 5, 3, 0.3408689266074644996},
    {0.0, 1, 1, 1, 1, 1, 0.26424111765711535681},
    {1.0, 1, 2, 1, 0.5, 0.7, 0.38813089477841865264},
    {-0.7, 0.5, 3, 2, 1, 2.5, 0.41206392495630238214},
    {1.0, 1, 1, 1, 5, 3e-5, 1.7999568006965913298e-10},
    {-1.0, 1, 1, 1, 5, 3e-5, 2.1599470807659276733e-15},
    {0.25, 2, 0.5, 3, 0.25, 4, 0.89241598684040029068},
};

}  // namespace

TEST(GammaThreshold, Examples) {
  EXPECT_EQ(gamma_threshold(0.0, 1e-5), 0.0);
  EXPECT_DOUBLE_EQ(gamma_threshold(1.0, 1e-5), 3e-5);
  EXPECT_EQ(gamma_threshold(0.5, 1.0), 1.0);
  double prev = -1.0;
  for (double r = 0.0; r < 4.0; r += 0.01) {
    const double g = gamma_threshold(r, 0.3);
    EXPECT_GT(g, prev);
    prev = g;
  }
  EXPECT_THROW(gamma_threshold(-0.1, 1.0), InvalidArgument);
  EXPECT_THROW(gamma_threshold(0.1, 0.0), InvalidArgument);
}

TEST(OutageQuery, Validation) {
  EXPECT_THROW(validate(OutageQuery{-1.0, PowerBudget(0, 1, 2, 1), FadingMarginals(1, 1), DependenceParameter(0)}),
               InvalidArgument);
  EXPECT_THROW(outage_quadrature({1.0, PowerBudget(1, 1, 2, 1), FadingMarginals(1, 1), DependenceParameter(0)}),
               InvalidArgument);
  EXPECT_THROW(outage_quadrature(query_for(0, 1, 1, 1, 1, 1), 0.0), InvalidArgument);
  EXPECT_THROW(outage_quadrature(query_for(0, 1, 1, 1, 1, 1), 0.1), InvalidArgument);
}

TEST(OutageMethodNames, RoundTrip) {
  for (auto m : {OutageMethod::kPaperClosedForm, OutageMethod::kQuadrature, OutageMethod::kMonteCarlo}) {
    EXPECT_EQ(parse_outage_method(to_string(m)), m);
  }
  EXPECT_FALSE(parse_outage_method("simulation").has_value());
}

TEST(BruteForceOracle, AgreesWithFrozenValues) {
  for (const auto& c : kFrozen) {
    const double v = brute_force_outage(c.theta, c.l1, c.l2, c.a, c.b, c.gamma);
    EXPECT_NEAR(v, c.expected, 1e-13 * std::max(1.0, c.expected) + 1e-6 * c.expected);
  }
}

TEST(Quadrature, FrozenReferenceValues) {
  for (const auto& c : kFrozen) {
    const OutageEstimate e = outage_quadrature(query_for(c.theta, c.l1, c.l2, c.a, c.b, c.gamma));
    EXPECT_EQ(e.method, OutageMethod::kQuadrature);
    EXPECT_FALSE(e.std_error.has_value());
    EXPECT_NEAR(e.value, c.expected, 1e-10);
    // Tiny probabilities keep full relative accuracy too.
    EXPECT_NEAR(e.value, c.expected, 1e-9 * c.expected + 1e-14);
  }
}

TEST(Quadrature, ZeroRateIsZero) {
  const OutageQuery q{0.0, PowerBudget(0, 1, 5, 1e-5), FadingMarginals(1, 1), DependenceParameter(0.3)};
  EXPECT_EQ(outage_quadrature(q).value, 0.0);
}

TEST(Quadrature, IndependentCaseMatchesConvolution) {
  EXPECT_NEAR(outage_quadrature(query_for(0, 1, 1, 1, 1, 1)).value, 1.0 - 2.0 * std::exp(-1.0), 1e-10);
  for (double l1 : {0.5, 1.0, 2.5}) {
    for (double l2 : {0.7, 1.9}) {
      for (auto [a, b] : {std::pair{1.0, 5.0}, std::pair{4.0, 0.5}}) {
        for (double gamma : {0.05, 1.3, 9.0}) {
          const double formula = independent_outage(l1, l2, a, b, gamma);
          // The convolution formula itself is confirmed by brute force first.
          ASSERT_NEAR(formula, brute_force_outage(0, l1, l2, a, b, gamma), 1e-12);
          EXPECT_NEAR(outage_quadrature(query_for(0, l1, l2, a, b, gamma)).value, formula, 1e-10);
        }
      }
    }
  }
}

TEST(Quadrature, AffineInTheta) {
  for (const auto& c : kFrozen) {
    auto op = [&](double t) { return outage_quadrature(query_for(t, c.l1, c.l2, c.a, c.b, c.gamma)).value; };
    const double p0 = op(0.0), p1 = op(1.0);
    for (double t : {-1.0, -0.6, -0.25, 0.3, 0.75}) EXPECT_NEAR(op(t), p0 + t * (p1 - p0), 2e-10);
  }
}

TEST(Quadrature, NondecreasingInRate) {
  for (double t : {-1.0, 0.0, 1.0}) {
    double prev = 0.0;
    for (double r = 0.0; r <= 3.0; r += 0.05) {
      const OutageQuery q{r, PowerBudget(0.2, 1.5, 2.5, 0.8), FadingMarginals(1.0, 0.6), DependenceParameter(t)};
      const double v = outage_quadrature(q).value;
      EXPECT_GE(v, prev);
      EXPECT_LE(v, 1.0);
      prev = v;
    }
  }
}

TEST(Quadrature, UnreachableToleranceReportsNonConvergence) {
  EXPECT_THROW(outage_quadrature(query_for(0.5, 1, 1, 1, 5, 3), 1e-300), QuadratureNonConvergence);
}

TEST(PaperClosedForm, ReducesToSingleTermAtThetaZero) {
  const OutageQuery q = query_for(0.0, 1.0, 3.0, 2.0, 1.0, 0.8);
  const double p = 0.5;
  EXPECT_DOUBLE_EQ(outage_paper_closed_form(q).value, 1.0 - 3.0 * std::exp(-0.8 / 2.0) / (3.0 - p));
}

TEST(PaperClosedForm, ZeroThresholdIsOutOfRange) {
  // lambda1 = lambda2 = 1, P = B / A = 0.2, gamma = 0.
  const OutageQuery q{0.0, PowerBudget(0.0, 5.0, 1.0, 1.0), FadingMarginals(1, 1), DependenceParameter(0.0)};
  const OutageEstimate e = outage_paper_closed_form(q);
  EXPECT_DOUBLE_EQ(e.value, -0.25);
  EXPECT_TRUE(e.out_of_range);
  EXPECT_EQ(e.method, OutageMethod::kPaperClosedForm);
  EXPECT_EQ(outage_quadrature(q).value, 0.0);
}

TEST(PaperClosedForm, DegenerateDenominators) {
  EXPECT_THROW(outage_paper_closed_form(query_for(0.4, 1, 1, 1, 1, 1)), DegenerateDenominator);
  // 2 lambda2 - P lambda1 = 0.
  EXPECT_THROW(outage_paper_closed_form(query_for(0.4, 1, 1, 1, 2, 1)), DegenerateDenominator);
  // lambda2 - 2 P lambda1 = 0.
  EXPECT_THROW(outage_paper_closed_form(query_for(0.4, 1, 2, 1, 1, 1)), DegenerateDenominator);
  EXPECT_NO_THROW(outage_paper_closed_form(query_for(0.4, 1, 2.5, 1, 1, 1)));
}

TEST(PaperClosedForm, AffineInTheta) {
  for (const auto& c : kFrozen) {
    if (c.theta == 0.0 && c.l1 == c.l2 && c.a == c.b) continue;  // degenerate P = 1 case
    auto op = [&](double t) { return outage_paper_closed_form(query_for(t, c.l1, c.l2, c.a, c.b, c.gamma)).value; };
    const double p0 = op(0.0), p1 = op(1.0);
    for (double t : {-1.0, -0.5, 0.5}) {
      EXPECT_NEAR(op(t), p0 + t * (p1 - p0), 1e-15 * std::max({1.0, std::abs(p0), std::abs(p1)}));
    }
  }
}

TEST(PaperClosedForm, IndependentResidualIsTheMissingTruncation) {
  // exact - closed form = lambda1 P e^{-lambda2 gamma / B} / (lambda2 - lambda1 P),
  // checked against brute force, then enshrined against the quadrature path.
  for (double l1 : {0.5, 1.0, 2.0}) {
    for (double l2 : {1.7, 3.1}) {
      for (auto [a, b] : {std::pair{1.0, 0.4}, std::pair{2.0, 2.6}}) {
        for (double gamma : {0.01, 0.5, 2.0}) {
          const OutageQuery q = query_for(0.0, l1, l2, a, b, gamma);
          const double p = b / a;
          const double residual = l1 * p * std::exp(-l2 * gamma / b) / (l2 - l1 * p);
          const double paper = outage_paper_closed_form(q).value;
          ASSERT_NEAR(brute_force_outage(0, l1, l2, a, b, gamma) - paper, residual, 1e-11);
          EXPECT_NEAR(outage_quadrature(q).value - paper, residual, 1e-9);
        }
      }
    }
  }
}

TEST(MonteCarlo, AgreesWithQuadrature) {
  const OutageQuery q = query_for(0.5, 1, 1, 1, 5, 3);
  const OutageEstimate mc = outage_monte_carlo(q, 1'000'000, 12345);
  ASSERT_TRUE(mc.std_error.has_value());
  EXPECT_EQ(mc.samples, 1'000'000u);
  EXPECT_EQ(mc.method, OutageMethod::kMonteCarlo);
  EXPECT_LE(std::abs(mc.value - 0.3408689266074644996), 3.29 * *mc.std_error);
}

TEST(MonteCarlo, CertainAndImpossibleEvents) {
  const OutageEstimate none =
      outage_monte_carlo({0.0, PowerBudget(0, 1, 1, 1), FadingMarginals(1, 1), DependenceParameter(0.2)}, 5000, 1);
  EXPECT_EQ(none.value, 0.0);
  EXPECT_EQ(*none.std_error, 0.0);
  const OutageEstimate all = outage_monte_carlo(query_for(-0.4, 1, 1, 1, 1, 1e3), 5000, 1);
  EXPECT_EQ(all.value, 1.0);
  EXPECT_EQ(*all.std_error, 0.0);
}

TEST(MonteCarlo, RejectsTooFewSamples) {
  EXPECT_THROW(outage_monte_carlo(query_for(0, 1, 1, 1, 1, 1), 999, 1), InvalidArgument);
}

TEST(MonteCarlo, IndependentOfThreadCount) {
  const OutageQuery q = query_for(-0.8, 1.2, 0.7, 1.5, 2.0, 1.1);
  for (const auto* kernels : {&sim::scalar_kernels(), sim::avx2_kernels()}) {
    if (kernels == nullptr) continue;
    const OutageEstimate serial = outage_monte_carlo(q, 300'001, 42, {1, kernels});
    for (unsigned threads : {2u, 3u, 8u, 0u}) {
      const OutageEstimate parallel = outage_monte_carlo(q, 300'001, 42, {threads, kernels});
      EXPECT_EQ(serial.value, parallel.value);
      EXPECT_EQ(*serial.std_error, *parallel.std_error);
    }
    EXPECT_NE(serial.value, outage_monte_carlo(q, 300'001, 43, {1, kernels}).value);
  }
}

TEST(MonteCarlo, ScalarKernelReplaysLibrarySampler) {
  const OutageQuery q = query_for(0.7, 1.0, 2.0, 1.0, 0.5, 0.7);
  const std::uint64_t n = 200'000, seed = 9;
  CounterStream stream(derive_key(seed, {}));
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const GainPair g = sample_gain_pair(q.theta, q.marginals, stream);
    hits += (1.0 * g.g1 + 0.5 * g.g2 <= 0.7) ? 1 : 0;
  }
  const OutageEstimate mc = outage_monte_carlo(q, n, seed, {1, &sim::scalar_kernels()});
  EXPECT_EQ(mc.value, static_cast<double>(hits) / static_cast<double>(n));
}

TEST(PointToPoint, Examples) {
  EXPECT_EQ(outage_point_to_point(0.0, 1.0, 1.0, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(outage_point_to_point(0.5, 1.0, std::log(2.0), 1.0), 0.5);
  EXPECT_NEAR(outage_point_to_point(0.5, 1.0, 1.0, 2.0), 0.8646647167633873, 1e-15);
  EXPECT_THROW(outage_point_to_point(0.5, 0.0, 1.0, 1.0), InvalidArgument);
}

TEST(PointToPoint, MatchesSingleGainSimulation) {
  // g ~ Exp(2); outage when g < N (2^{2R} - 1) / P = 1.
  CounterStream stream(derive_key(31, {}));
  const int n = 1'000'000;
  int hits = 0;
  for (int i = 0; i < n; ++i) hits += (-std::log1p(-stream.next_unit()) / 2.0 < 1.0) ? 1 : 0;
  const double p_hat = static_cast<double>(hits) / n;
  const double se = std::sqrt(p_hat * (1 - p_hat) / n);
  EXPECT_LE(std::abs(p_hat - outage_point_to_point(0.5, 1.0, 1.0, 2.0)), 3.29 * se);
}
