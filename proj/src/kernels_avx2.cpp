// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "pointspec/kernels.hpp"

namespace pointspec::kernels::avx2 {

void sign_changes(std::span<const double> v, std::vector<std::size_t>& out) {
  const std::size_t n = v.size();
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 < n; i += 4) {
    const __m256d a = _mm256_loadu_pd(v.data() + i);
    const __m256d b = _mm256_loadu_pd(v.data() + i + 1);
    const __m256d a_neg = _mm256_cmp_pd(a, zero, _CMP_LT_OQ);
    const __m256d a_pos = _mm256_cmp_pd(a, zero, _CMP_GT_OQ);
    const __m256d b_neg = _mm256_cmp_pd(b, zero, _CMP_LT_OQ);
    const __m256d b_pos = _mm256_cmp_pd(b, zero, _CMP_GT_OQ);
    const __m256d change = _mm256_or_pd(_mm256_and_pd(a_neg, b_pos), _mm256_and_pd(a_pos, b_neg));
    int mask = _mm256_movemask_pd(change);
    while (mask != 0) {
      const int lane = __builtin_ctz(static_cast<unsigned>(mask));
      out.push_back(i + static_cast<std::size_t>(lane));
      mask &= mask - 1;
    }
  }
  for (; i + 1 < n; ++i) {
    if ((v[i] < 0.0 && v[i + 1] > 0.0) || (v[i] > 0.0 && v[i + 1] < 0.0)) out.push_back(i);
  }
}

double resolvent_sum(std::span<const double> weights, std::span<const double> levels, double x) {
  const std::size_t n = weights.size();
  const __m256d shift = _mm256_set1_pd(x);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(levels.data() + i), shift);
    const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(levels.data() + i + 4), shift);
    acc0 = _mm256_add_pd(acc0, _mm256_div_pd(_mm256_loadu_pd(weights.data() + i), d0));
    acc1 = _mm256_add_pd(acc1, _mm256_div_pd(_mm256_loadu_pd(weights.data() + i + 4), d1));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) sum += weights[i] / (levels[i] - x);
  return sum;
}

}  // namespace pointspec::kernels::avx2
