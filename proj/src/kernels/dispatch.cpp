#include "supercong/errors.hpp"
#include "supercong/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <vector>

namespace supercong::kernels {

namespace {

std::vector<KernelInfo> detect() {
  std::vector<KernelInfo> out{{"scalar", &mul_acc_scalar}};
#if defined(SUPERCONG_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) out.push_back({"avx2", &mul_acc_avx2});
#endif
#if defined(SUPERCONG_HAVE_NEON)
  out.push_back({"neon", &mul_acc_neon});  // baseline on aarch64
#endif
  return out;
}

const std::vector<KernelInfo>& table() {
  static const std::vector<KernelInfo> kernels = detect();
  return kernels;
}

const KernelInfo* find(std::string_view name) {
  for (const auto& k : table()) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

const KernelInfo* default_choice() {
  if (const char* env = std::getenv("SUPERCONG_KERNEL"); env && *env) {
    if (const KernelInfo* k = find(env)) return k;
    throw DomainError(std::string("SUPERCONG_KERNEL=") + env + " is not available on this machine");
  }
  return &table().back();
}

std::atomic<const KernelInfo*>& current() {
  static std::atomic<const KernelInfo*> chosen{default_choice()};
  return chosen;
}

}  // namespace

std::span<const KernelInfo> available() { return table(); }

const KernelInfo& active() { return *current().load(std::memory_order_acquire); }

void select(std::string_view name) {
  const KernelInfo* k = find(name);
  if (!k) throw DomainError("kernel '" + std::string(name) + "' is not available on this machine");
  current().store(k, std::memory_order_release);
}

void reset_selection() { current().store(default_choice(), std::memory_order_release); }

}  // namespace supercong::kernels
