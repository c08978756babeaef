#include <cmath>

#include "kernels_internal.hpp"
#include "swmac/copula.hpp"

namespace swmac::sim {

namespace {

void fgm_exp_gains(const FgmExpParams& params, std::span<const double> s1, std::span<const double> sv,
                   std::span<double> g1, std::span<double> g2) {
  for (std::size_t i = 0; i < s1.size(); ++i) {
    const double a = params.theta * (1.0 - 2.0 * (1.0 - s1[i]));
    const double w = detail::fgm_inverse_survival(a, sv[i]);
    g1[i] = -std::log(s1[i]) / params.lambda1;
    g2[i] = -std::log(w) / params.lambda2;
  }
}

std::uint64_t count_weighted_sum_at_most(std::span<const double> g1, std::span<const double> g2, double w1,
                                         double w2, double threshold) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < g1.size(); ++i) count += (w1 * g1[i] + w2 * g2[i] <= threshold) ? 1 : 0;
  return count;
}

void log(std::span<const double> x, std::span<double> out) {
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::log(x[i]);
}

}  // namespace

const KernelSet& scalar_kernels() noexcept {
  static constexpr KernelSet kSet{"scalar", &fgm_exp_gains, &count_weighted_sum_at_most, &log};
  return kSet;
}

}  // namespace swmac::sim
