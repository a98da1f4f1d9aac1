// Compiled with -mavx2; only called after a runtime CPU check.
#include <immintrin.h>

#include "kgqa/simd/distance.hpp"

namespace kgqa::simd::detail {

std::int64_t squared_distance_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i d = _mm256_sub_epi32(va, vb);
    // Signed 32x32->64 products of the even lanes, then the odd lanes.
    __m256i even = _mm256_mul_epi32(d, d);
    __m256i odd_d = _mm256_srli_epi64(d, 32);
    __m256i odd = _mm256_mul_epi32(odd_d, odd_d);
    acc = _mm256_add_epi64(acc, _mm256_add_epi64(even, odd));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  return sum + squared_distance_scalar(a + i, b + i, n - i);
}

}  // namespace kgqa::simd::detail
