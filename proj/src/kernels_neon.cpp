#include <arm_neon.h>

#include "pointspec/kernels.hpp"

namespace pointspec::kernels::neon {

void sign_changes(std::span<const double> v, std::vector<std::size_t>& out) {
  const std::size_t n = v.size();
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) {
    const float64x2_t a = vld1q_f64(v.data() + i);
    const float64x2_t b = vld1q_f64(v.data() + i + 1);
    const uint64x2_t change = vorrq_u64(vandq_u64(vcltq_f64(a, zero), vcgtq_f64(b, zero)),
                                        vandq_u64(vcgtq_f64(a, zero), vcltq_f64(b, zero)));
    if (vgetq_lane_u64(change, 0) != 0) out.push_back(i);
    if (vgetq_lane_u64(change, 1) != 0) out.push_back(i + 1);
  }
  for (; i + 1 < n; ++i) {
    if ((v[i] < 0.0 && v[i + 1] > 0.0) || (v[i] > 0.0 && v[i + 1] < 0.0)) out.push_back(i);
  }
}

double resolvent_sum(std::span<const double> weights, std::span<const double> levels, double x) {
  const std::size_t n = weights.size();
  const float64x2_t shift = vdupq_n_f64(x);
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t d0 = vsubq_f64(vld1q_f64(levels.data() + i), shift);
    const float64x2_t d1 = vsubq_f64(vld1q_f64(levels.data() + i + 2), shift);
    acc0 = vaddq_f64(acc0, vdivq_f64(vld1q_f64(weights.data() + i), d0));
    acc1 = vaddq_f64(acc1, vdivq_f64(vld1q_f64(weights.data() + i + 2), d1));
  }
  double sum = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) sum += weights[i] / (levels[i] - x);
  return sum;
}

}  // namespace pointspec::kernels::neon
