#pragma once

// Sum-rate outage probability P[A g1 + B g2 <= gamma] with A = P1 - P0,
// B = P2 - P0, gamma = N (2^{2R} - 1), for FGM-dependent exponential gains.
// Three evaluators are provided so they can check each other:
//   - the published closed form (reproduced verbatim, known to ignore the
//     g1 >= 0 truncation of the integration region),
//   - adaptive quadrature of the exact triangle integral,
//   - Monte Carlo over the copula sampler.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "swmac/copula.hpp"
#include "swmac/regions.hpp"

namespace swmac {

namespace sim {
struct KernelSet;
}

enum class OutageMethod { kPaperClosedForm, kQuadrature, kMonteCarlo };

std::string_view to_string(OutageMethod method) noexcept;
/// Accepts "paper-closed-form", "quadrature", "monte-carlo".
std::optional<OutageMethod> parse_outage_method(std::string_view name) noexcept;

struct OutageQuery {
  double rate_threshold;
  PowerBudget budget;
  FadingMarginals marginals;
  DependenceParameter theta;
};

/// Rejects negative rates and budgets with P0 >= min(P1, P2).
void validate(const OutageQuery& query);

struct OutageEstimate {
  double value;
  OutageMethod method;
  std::optional<double> std_error;
  std::optional<std::uint64_t> samples;
  /// Only the closed form can leave [0, 1].
  bool out_of_range = false;
};

/// N (2^{2R} - 1).
double gamma_threshold(double rate_threshold, double noise);

/// The closed form exactly as published. Throws DegenerateDenominator when
/// any of lambda2 - lambda1 P, 2 lambda2 - P lambda1, lambda2 - 2 P lambda1
/// is below 1e-9 lambda2 in magnitude.
OutageEstimate outage_paper_closed_form(const OutageQuery& query);

inline constexpr double kDefaultQuadratureTolerance = 1e-10;

/// Inner g1 integral in closed form, outer g2 integral by adaptive
/// Gauss-Kronrod. Absolute error <= tol, tol in (0, 1e-2].
OutageEstimate outage_quadrature(const OutageQuery& query, double tol = kDefaultQuadratureTolerance);

struct MonteCarloOptions {
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 1;
  /// nullptr selects the best kernel for the running CPU.
  const sim::KernelSet* kernels = nullptr;
};

/// Samples are generated in fixed chunks from a counter-based stream keyed
/// by seed, so the estimate does not depend on options.threads.
OutageEstimate outage_monte_carlo(const OutageQuery& query, std::uint64_t samples, std::uint64_t seed,
                                  const MonteCarloOptions& options = {});

/// Point-to-point outage P[g < N (2^{2R} - 1) / P] for g ~ Exp(lambda).
double outage_point_to_point(double rate_threshold, double power, double noise, double lambda);

}  // namespace swmac
