// AVX2 variants of the simulation kernels. Built with -mavx2 only (no FMA) so
// that the arithmetic outside log() rounds exactly like the scalar kernels.

#include <immintrin.h>

#include <bit>
#include <cmath>

#include "kernels_internal.hpp"
#include "swmac/copula.hpp"

namespace swmac::sim {

namespace {

// Cephes log: x = m 2^e with m in [sqrt(1/2), sqrt(2)), log(1 + f) for
// f = m - 1 by a 5/5 rational approximation, and e ln 2 split into a
// short high part plus a correction. Valid for positive normal x.
constexpr double kLogP[] = {1.01875663804580931796E-4, 4.97494994976747001425E-1, 4.70579119878881725854E0,
                            1.44989225341610930846E1,  1.79368678507819816313E1,  7.70838733755885391666E0};
constexpr double kLogQ[] = {1.12873587189167450590E1, 4.52279145837532221105E1, 8.29875266912776603211E1,
                            7.11544750618563894466E1, 2.31251620126765340583E1};
constexpr double kLn2Hi = 0.693359375;
constexpr double kLn2Lo = -2.121944400546905827679e-4;

inline __m256d log_pd(__m256d x) {
  // Subnormals: scale into the normal range and correct the exponent below.
  const __m256d tiny = _mm256_cmp_pd(x, _mm256_set1_pd(0x1.0p-1022), _CMP_LT_OQ);
  x = _mm256_blendv_pd(x, _mm256_mul_pd(x, _mm256_set1_pd(0x1.0p54)), tiny);
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
  const __m256i half_exp = _mm256_set1_epi64x(0x3FE0000000000000LL);
  // m in [0.5, 1), biased exponent in 0..2047.
  __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), half_exp));
  const __m256i biased = _mm256_srli_epi64(bits, 52);
  const __m256d two52 = _mm256_set1_pd(0x1.0p52);
  __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(biased, _mm256_castpd_si256(two52))), two52);
  e = _mm256_sub_pd(e, _mm256_set1_pd(1022.0));
  e = _mm256_sub_pd(e, _mm256_and_pd(tiny, _mm256_set1_pd(54.0)));

  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d below = _mm256_cmp_pd(m, _mm256_set1_pd(0.70710678118654752440), _CMP_LT_OQ);
  // m < sqrt(1/2): use 2m - 1 and e - 1.
  e = _mm256_sub_pd(e, _mm256_and_pd(below, one));
  const __m256d f = _mm256_sub_pd(_mm256_add_pd(m, _mm256_and_pd(below, m)), one);

  const __m256d z = _mm256_mul_pd(f, f);
  __m256d p = _mm256_set1_pd(kLogP[0]);
  for (int i = 1; i < 6; ++i) p = _mm256_add_pd(_mm256_mul_pd(p, f), _mm256_set1_pd(kLogP[i]));
  __m256d q = _mm256_add_pd(f, _mm256_set1_pd(kLogQ[0]));
  for (int i = 1; i < 5; ++i) q = _mm256_add_pd(_mm256_mul_pd(q, f), _mm256_set1_pd(kLogQ[i]));

  __m256d y = _mm256_mul_pd(f, _mm256_div_pd(_mm256_mul_pd(z, p), q));
  y = _mm256_add_pd(y, _mm256_mul_pd(e, _mm256_set1_pd(kLn2Lo)));
  y = _mm256_sub_pd(y, _mm256_mul_pd(_mm256_set1_pd(0.5), z));
  __m256d r = _mm256_add_pd(f, y);
  return _mm256_add_pd(r, _mm256_mul_pd(e, _mm256_set1_pd(kLn2Hi)));
}

// Same formula as detail::fgm_inverse_survival, four lanes at a time.
inline __m256d fgm_inverse_survival_pd(__m256d a, __m256d sv) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d four_a = _mm256_mul_pd(_mm256_set1_pd(4.0), a);
  const __m256d b = _mm256_sub_pd(one, a);
  const __m256d c = _mm256_add_pd(one, a);
  const __m256d d_pos = _mm256_add_pd(_mm256_mul_pd(b, b), _mm256_mul_pd(four_a, sv));
  const __m256d d_neg = _mm256_sub_pd(_mm256_mul_pd(c, c), _mm256_mul_pd(four_a, _mm256_sub_pd(one, sv)));
  const __m256d negative = _mm256_cmp_pd(a, _mm256_setzero_pd(), _CMP_LT_OQ);
  const __m256d disc = _mm256_max_pd(_mm256_blendv_pd(d_pos, d_neg, negative), _mm256_setzero_pd());
  const __m256d w =
      _mm256_min_pd(_mm256_div_pd(_mm256_mul_pd(_mm256_set1_pd(2.0), sv), _mm256_add_pd(b, _mm256_sqrt_pd(disc))), one);
  const __m256d zero_sv = _mm256_cmp_pd(sv, _mm256_setzero_pd(), _CMP_EQ_OQ);
  return _mm256_andnot_pd(zero_sv, w);
}

void fgm_exp_gains(const FgmExpParams& params, std::span<const double> s1, std::span<const double> sv,
                   std::span<double> g1, std::span<double> g2) {
  const std::size_t n = s1.size();
  const __m256d theta = _mm256_set1_pd(params.theta);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d lambda1 = _mm256_set1_pd(params.lambda1);
  const __m256d lambda2 = _mm256_set1_pd(params.lambda2);
  const __m256d sign = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d s = _mm256_loadu_pd(s1.data() + i);
    const __m256d v = _mm256_loadu_pd(sv.data() + i);
    const __m256d a = _mm256_mul_pd(theta, _mm256_sub_pd(one, _mm256_mul_pd(two, _mm256_sub_pd(one, s))));
    const __m256d w = fgm_inverse_survival_pd(a, v);
    _mm256_storeu_pd(g1.data() + i, _mm256_div_pd(_mm256_xor_pd(log_pd(s), sign), lambda1));
    _mm256_storeu_pd(g2.data() + i, _mm256_div_pd(_mm256_xor_pd(log_pd(w), sign), lambda2));
  }
  if (i < n) scalar_kernels().fgm_exp_gains(params, s1.subspan(i), sv.subspan(i), g1.subspan(i), g2.subspan(i));
}

std::uint64_t count_weighted_sum_at_most(std::span<const double> g1, std::span<const double> g2, double w1,
                                         double w2, double threshold) {
  const std::size_t n = g1.size();
  const __m256d vw1 = _mm256_set1_pd(w1);
  const __m256d vw2 = _mm256_set1_pd(w2);
  const __m256d vt = _mm256_set1_pd(threshold);
  std::uint64_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d sum = _mm256_add_pd(_mm256_mul_pd(vw1, _mm256_loadu_pd(g1.data() + i)),
                                      _mm256_mul_pd(vw2, _mm256_loadu_pd(g2.data() + i)));
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(sum, vt, _CMP_LE_OQ));
    count += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(mask)));
  }
  if (i < n) count += scalar_kernels().count_weighted_sum_at_most(g1.subspan(i), g2.subspan(i), w1, w2, threshold);
  return count;
}

void log(std::span<const double> x, std::span<double> out) {
  std::size_t i = 0;
  for (; i + 4 <= x.size(); i += 4) _mm256_storeu_pd(out.data() + i, log_pd(_mm256_loadu_pd(x.data() + i)));
  if (i < x.size()) scalar_kernels().log(x.subspan(i), out.subspan(i));
}

}  // namespace

const KernelSet& avx2_kernel_table() noexcept {
  static constexpr KernelSet kSet{"avx2", &fgm_exp_gains, &count_weighted_sum_at_most, &log};
  return kSet;
}

}  // namespace swmac::sim
