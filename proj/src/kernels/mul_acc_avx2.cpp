#include "supercong/kernels.hpp"

#include <immintrin.h>

namespace supercong::kernels {

// _mm256_mul_epu32 multiplies the low 32 bits of each 64-bit lane into a full
// 64-bit product, which is exactly the src < 2^32, scale < 2^32 contract.
void mul_acc_avx2(std::uint64_t* acc, const std::uint64_t* src, std::size_t len, std::uint64_t scale) {
  const __m256i s = _mm256_set1_epi64x(static_cast<long long>(scale));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i x0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i x1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 4));
    __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i + 4));
    a0 = _mm256_add_epi64(a0, _mm256_mul_epu32(x0, s));
    a1 = _mm256_add_epi64(a1, _mm256_mul_epu32(x1, s));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), a0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i + 4), a1);
  }
  for (; i + 4 <= len; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    a = _mm256_add_epi64(a, _mm256_mul_epu32(x, s));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), a);
  }
  for (; i < len; ++i) acc[i] += scale * src[i];
}

}  // namespace supercong::kernels
