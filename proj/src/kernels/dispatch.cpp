#include <cstdlib>
#include <string>

#include "kernels_internal.hpp"
#include "swmac/errors.hpp"
#include "swmac/random.hpp"

namespace swmac::sim {

const KernelSet* avx2_kernels() noexcept {
#if defined(SWMAC_HAVE_AVX2_KERNELS)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& kernels_by_name(std::string_view name) {
  if (name == "scalar") return scalar_kernels();
  if (name == "avx2") {
    if (const KernelSet* set = avx2_kernels()) return *set;
    throw InvalidArgument("avx2 kernels are not available on this build or CPU");
  }
  if (name == "auto") {
    if (const KernelSet* set = avx2_kernels()) return *set;
    return scalar_kernels();
  }
  throw InvalidArgument("unknown kernel set '" + std::string(name) + "' (expected scalar, avx2 or auto)");
}

const KernelSet& default_kernels() {
  static const KernelSet& chosen = [] () -> const KernelSet& {
    const char* env = std::getenv("SWMAC_KERNEL");
    return kernels_by_name(env != nullptr && *env != '\0' ? env : "auto");
  }();
  return chosen;
}

std::vector<std::string_view> available_kernels() {
  std::vector<std::string_view> names{scalar_kernels().name};
  if (const KernelSet* set = avx2_kernels()) names.push_back(set->name);
  return names;
}

void fill_survival_uniforms(std::uint64_t key, std::uint64_t first, std::span<double> s1,
                            std::span<double> sv) noexcept {
  CounterStream stream(key, 2 * first);
  for (std::size_t i = 0; i < s1.size(); ++i) {
    s1[i] = 1.0 - stream.next_unit();
    sv[i] = 1.0 - stream.next_unit();
  }
}

}  // namespace swmac::sim
