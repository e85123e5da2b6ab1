#include "supercong/kernels.hpp"

#include <arm_neon.h>

namespace supercong::kernels {

// vmlal_u32 widens two 32-bit lanes and accumulates into 64-bit lanes.
void mul_acc_neon(std::uint64_t* acc, const std::uint64_t* src, std::size_t len, std::uint64_t scale) {
  const uint32x2_t s = vdup_n_u32(static_cast<std::uint32_t>(scale));
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    uint32x2_t x0 = vmovn_u64(vld1q_u64(src + i));
    uint32x2_t x1 = vmovn_u64(vld1q_u64(src + i + 2));
    uint64x2_t a0 = vmlal_u32(vld1q_u64(acc + i), x0, s);
    uint64x2_t a1 = vmlal_u32(vld1q_u64(acc + i + 2), x1, s);
    vst1q_u64(acc + i, a0);
    vst1q_u64(acc + i + 2, a1);
  }
  for (; i < len; ++i) acc[i] += scale * src[i];
}

}  // namespace supercong::kernels
