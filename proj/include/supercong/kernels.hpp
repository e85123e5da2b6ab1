#pragma once

// Multiply-accumulate kernel behind the truncated convolution in poly.cpp:
//
//   acc[i] += scale * src[i]    for i in [0, len)
//
// on 64-bit lanes, with src[i] < 2^32 and scale < 2^32. The kernels never
// reduce; the caller bounds how many rows it accumulates between reductions
// so that acc cannot wrap.
//
// A scalar reference is always present. AVX2 (x86-64) and NEON (aarch64)
// variants are compiled when the toolchain supports them and are selected at
// runtime, after a CPU feature check. SUPERCONG_KERNEL=<name> in the
// environment pins a variant, which is how the equivalence tests and the
// benchmarks exercise each path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace supercong::kernels {

using MulAccFn = void (*)(std::uint64_t* acc, const std::uint64_t* src, std::size_t len,
                          std::uint64_t scale);

struct KernelInfo {
  std::string_view name;
  MulAccFn mul_acc;
};

/// Kernels usable on this machine; the scalar reference is always first.
std::span<const KernelInfo> available();

/// Kernel currently used by mul_acc().
const KernelInfo& active();

/// Pins a kernel by name. Throws DomainError if it is not available here.
void select(std::string_view name);

/// Restores the default choice (environment override, else widest ISA).
void reset_selection();

inline void mul_acc(std::span<std::uint64_t> acc, std::span<const std::uint64_t> src,
                    std::uint64_t scale) {
  active().mul_acc(acc.data(), src.data(), src.size() < acc.size() ? src.size() : acc.size(), scale);
}

// Individual variants, exposed for the equivalence tests.
void mul_acc_scalar(std::uint64_t* acc, const std::uint64_t* src, std::size_t len, std::uint64_t scale);
#if defined(SUPERCONG_HAVE_AVX2)
void mul_acc_avx2(std::uint64_t* acc, const std::uint64_t* src, std::size_t len, std::uint64_t scale);
#endif
#if defined(SUPERCONG_HAVE_NEON)
void mul_acc_neon(std::uint64_t* acc, const std::uint64_t* src, std::size_t len, std::uint64_t scale);
#endif

}  // namespace supercong::kernels
