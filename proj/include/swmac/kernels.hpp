#pragma once

// Batch simulation kernels. Each KernelSet implements the same contract;
// the scalar set is the reference, vector sets must agree with it (gains to
// a few ulp, event counts exactly on the equivalence corpus).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace swmac::sim {

struct FgmExpParams {
  double theta;
  double lambda1;
  double lambda2;
};

struct KernelSet {
  std::string_view name;

  /// Maps survival uniforms s1 = 1 - u1, sv = 1 - v (all in (0, 1]) to FGM
  /// dependent exponential gains. All spans have the same length.
  void (*fgm_exp_gains)(const FgmExpParams& params, std::span<const double> s1, std::span<const double> sv,
                        std::span<double> g1, std::span<double> g2);

  /// Number of i with w1 * g1[i] + w2 * g2[i] <= threshold.
  std::uint64_t (*count_weighted_sum_at_most)(std::span<const double> g1, std::span<const double> g2, double w1,
                                              double w2, double threshold);

  /// Natural log of each x[i] > 0 (exposed for equivalence tests).
  void (*log)(std::span<const double> x, std::span<double> out);
};

const KernelSet& scalar_kernels() noexcept;

/// nullptr when the build or the CPU lacks AVX2.
const KernelSet* avx2_kernels() noexcept;

/// Best available set for this CPU. SWMAC_KERNEL=scalar|avx2 overrides.
const KernelSet& default_kernels();

/// Looks up "scalar", "avx2" or "auto"; throws InvalidArgument if unknown
/// or unavailable.
const KernelSet& kernels_by_name(std::string_view name);

std::vector<std::string_view> available_kernels();

/// Fills survival uniforms for draws [first, first + s1.size()) of the
/// stream keyed by key. Draw i consumes stream positions 2i+1 and 2i+2.
void fill_survival_uniforms(std::uint64_t key, std::uint64_t first, std::span<double> s1, std::span<double> sv) noexcept;

}  // namespace swmac::sim
