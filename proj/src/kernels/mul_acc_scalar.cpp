#include "supercong/kernels.hpp"

namespace supercong::kernels {

void mul_acc_scalar(std::uint64_t* acc, const std::uint64_t* src, std::size_t len, std::uint64_t scale) {
  for (std::size_t i = 0; i < len; ++i) acc[i] += scale * src[i];
}

}  // namespace supercong::kernels
