#include "swmac/outage.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "swmac/errors.hpp"
#include "swmac/kernels.hpp"
#include "swmac/quadrature.hpp"
#include "swmac/random.hpp"

namespace swmac {

namespace {

constexpr std::uint64_t kMonteCarloChunk = 1u << 16;

struct Weights {
  double a;      // P1 - P0, weight of g1
  double b;      // P2 - P0, weight of g2
  double gamma;  // received-power threshold
};

Weights weights_of(const OutageQuery& query) {
  validate(query);
  return {query.budget.private1(), query.budget.private2(),
          gamma_threshold(query.rate_threshold, query.budget.noise())};
}

}  // namespace

std::string_view to_string(OutageMethod method) noexcept {
  switch (method) {
    case OutageMethod::kPaperClosedForm:
      return "paper-closed-form";
    case OutageMethod::kQuadrature:
      return "quadrature";
    case OutageMethod::kMonteCarlo:
      return "monte-carlo";
  }
  return "unknown";
}

std::optional<OutageMethod> parse_outage_method(std::string_view name) noexcept {
  for (auto m : {OutageMethod::kPaperClosedForm, OutageMethod::kQuadrature, OutageMethod::kMonteCarlo}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

void validate(const OutageQuery& query) {
  if (!(query.rate_threshold >= 0.0) || !std::isfinite(query.rate_threshold)) {
    throw InvalidArgument("rate threshold must be a finite value >= 0");
  }
  const PowerBudget& b = query.budget;
  if (!(b.p0() < std::min(b.p1(), b.p2()))) {
    throw InvalidArgument("outage evaluation requires P0 < min(P1, P2)");
  }
}

double gamma_threshold(double rate_threshold, double noise) {
  if (!(rate_threshold >= 0.0)) throw InvalidArgument("rate threshold must be >= 0");
  if (!(noise > 0.0)) throw InvalidArgument("noise variance must be positive");
  return noise * (std::exp2(2.0 * rate_threshold) - 1.0);
}

OutageEstimate outage_paper_closed_form(const OutageQuery& query) {
  const Weights w = weights_of(query);
  const double l1 = query.marginals.lambda1();
  const double l2 = query.marginals.lambda2();
  const double p = w.b / w.a;
  const double theta = query.theta.value();

  const double d1 = l2 - l1 * p;
  const double d2 = 2.0 * l2 - p * l1;
  const double d3 = l2 - 2.0 * p * l1;
  const double eps = 1e-9 * l2;
  if (std::abs(d1) < eps || std::abs(d2) < eps || std::abs(d3) < eps) {
    throw DegenerateDenominator("closed form is singular: lambda2 - lambda1 P = " + std::to_string(d1) +
                                ", 2 lambda2 - P lambda1 = " + std::to_string(d2) +
                                ", lambda2 - 2 P lambda1 = " + std::to_string(d3));
  }

  const double e_single = std::exp(-(l1 * w.gamma / w.a));
  const double e_double = std::exp(-(2.0 * w.gamma * l1 / w.a));
  const double independent = l2 * e_single / d1;
  const double dependent = l2 * e_single / d1 - 2.0 * l2 * e_single / d2 - l2 * e_double / d3 + l2 * e_double / d1;
  const double value = 1.0 - (independent + theta * dependent);

  OutageEstimate est{value, OutageMethod::kPaperClosedForm, std::nullopt, std::nullopt};
  est.out_of_range = !(value >= 0.0 && value <= 1.0);
  return est;
}

OutageEstimate outage_quadrature(const OutageQuery& query, double tol) {
  if (!(tol > 0.0 && tol <= 1e-2)) throw InvalidArgument("quadrature tolerance must lie in (0, 1e-2]");
  const Weights w = weights_of(query);
  if (w.gamma == 0.0) return {0.0, OutageMethod::kQuadrature, std::nullopt, std::nullopt};

  const double l1 = query.marginals.lambda1();
  const double l2 = query.marginals.lambda2();
  const double theta = query.theta.value();

  // For fixed g2 = y, g1 runs over [0, (gamma - B y) / A]. With F the
  // Exp(lambda1) CDF at that limit and c = 1 - e^{-lambda2 y}, the inner
  // integral of the joint density is
  //   lambda2 e^{-lambda2 y} F [(1 + theta) - theta (F + 2 c (1 - F))],
  // which has no cancellation at theta = -1 where the bracket is O(F).
  auto inner = [&](double y) {
    const double limit = std::max(0.0, (w.gamma - w.b * y) / w.a);
    const double f = -std::expm1(-l1 * limit);
    const double c = -std::expm1(-l2 * y);
    return l2 * std::exp(-l2 * y) * f * ((1.0 + theta) - theta * (f + 2.0 * c * (1.0 - f)));
  };

  const QuadratureResult result = integrate_adaptive(inner, 0.0, w.gamma / w.b, tol);
  if (!result.converged) {
    throw QuadratureNonConvergence("outage quadrature error estimate " + std::to_string(result.error) +
                                       " exceeds tolerance " + std::to_string(tol),
                                   result.error);
  }
  const double value = result.value;
  return {std::clamp(value, 0.0, 1.0), OutageMethod::kQuadrature, std::nullopt, std::nullopt};
}

OutageEstimate outage_monte_carlo(const OutageQuery& query, std::uint64_t samples, std::uint64_t seed,
                                  const MonteCarloOptions& options) {
  if (samples < 1000) throw InvalidArgument("Monte Carlo requires at least 1000 samples");
  const Weights w = weights_of(query);
  const sim::KernelSet& kernels = options.kernels != nullptr ? *options.kernels : sim::default_kernels();
  const sim::FgmExpParams params{query.theta.value(), query.marginals.lambda1(), query.marginals.lambda2()};
  const std::uint64_t key = derive_key(seed, {});

  const std::uint64_t chunks = (samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<std::uint64_t> counts(chunks, 0);
  std::atomic<std::uint64_t> next_chunk{0};

  auto worker = [&] {
    std::vector<double> s1(kMonteCarloChunk), sv(kMonteCarloChunk), g1(kMonteCarloChunk), g2(kMonteCarloChunk);
    for (std::uint64_t c = next_chunk++; c < chunks; c = next_chunk++) {
      const std::uint64_t first = c * kMonteCarloChunk;
      const std::size_t len = static_cast<std::size_t>(std::min(kMonteCarloChunk, samples - first));
      const std::span<double> s1v(s1.data(), len), svv(sv.data(), len), g1v(g1.data(), len), g2v(g2.data(), len);
      sim::fill_survival_uniforms(key, first, s1v, svv);
      kernels.fgm_exp_gains(params, s1v, svv, g1v, g2v);
      counts[c] = kernels.count_weighted_sum_at_most(g1v, g2v, w.a, w.b, w.gamma);
    }
  };

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::uint64_t hits = 0;
  for (std::uint64_t c : counts) hits += c;
  const double n = static_cast<double>(samples);
  const double p_hat = static_cast<double>(hits) / n;
  return {p_hat, OutageMethod::kMonteCarlo, std::sqrt(p_hat * (1.0 - p_hat) / n), samples};
}

double outage_point_to_point(double rate_threshold, double power, double noise, double lambda) {
  if (!(power > 0.0) || !(lambda > 0.0)) throw InvalidArgument("power and fading rate must be positive");
  return -std::expm1(-lambda * gamma_threshold(rate_threshold, noise) / power);
}

}  // namespace swmac
