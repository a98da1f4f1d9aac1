#include <arm_neon.h>

#include "kgqa/simd/distance.hpp"

namespace kgqa::simd::detail {

std::int64_t squared_distance_neon(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  int64x2_t acc = vdupq_n_s64(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    int32x4_t d = vsubq_s32(vld1q_s32(a + i), vld1q_s32(b + i));
    acc = vmlal_s32(acc, vget_low_s32(d), vget_low_s32(d));
    acc = vmlal_s32(acc, vget_high_s32(d), vget_high_s32(d));
  }
  std::int64_t sum = vgetq_lane_s64(acc, 0) + vgetq_lane_s64(acc, 1);
  return sum + squared_distance_scalar(a + i, b + i, n - i);
}

}  // namespace kgqa::simd::detail
