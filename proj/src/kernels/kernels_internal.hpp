#pragma once

#include "swmac/kernels.hpp"

namespace swmac::sim {

#if defined(SWMAC_HAVE_AVX2_KERNELS)
// Defined in avx2.cpp, which is the only translation unit built with -mavx2.
const KernelSet& avx2_kernel_table() noexcept;
#endif

}  // namespace swmac::sim
