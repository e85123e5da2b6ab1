#include "supercong/poly.hpp"

#include "supercong/kernels.hpp"

#include <algorithm>
#include <limits>

namespace supercong {

namespace {

std::size_t first_nonzero(std::span<const u64> a) {
  std::size_t i = 0;
  while (i < a.size() && a[i] == 0) ++i;
  return i;
}

Poly mul_wide(std::span<const u64> a, std::span<const u64> b, std::size_t out_len,
              const PrimePowerModulus& mod) {
  Poly out(out_len, 0);
  for (std::size_t i = 0; i < a.size() && i < out_len; ++i) {
    if (a[i] == 0) continue;
    std::size_t len = std::min(b.size(), out_len - i);
    for (std::size_t j = 0; j < len; ++j) out[i + j] = mod.add(out[i + j], mod.mul(a[i], b[j]));
  }
  return out;
}

}  // namespace

Poly mul_truncated(std::span<const u64> a, std::span<const u64> b, std::size_t degree,
                   const PrimePowerModulus& modulus) {
  std::size_t out_len = degree + 1;
  if (!a.empty() && !b.empty()) out_len = std::min(out_len, a.size() + b.size() - 1);
  else out_len = 0;
  Poly out(degree + 1, 0);
  if (out_len == 0) return out;

  const u64 m = modulus.value();
  if (m > (u64{1} << 32)) {
    Poly wide = mul_wide(a, b, out_len, modulus);
    std::copy(wide.begin(), wide.end(), out.begin());
    return out;
  }

  // Leading zeros of b only shift the product.
  const std::size_t shift = first_nonzero(b);
  if (shift >= b.size()) return out;
  std::span<const u64> tail = b.subspan(shift);

  // acc < m after a flush and each row adds at most (m-1)^2 per lane.
  const u64 term = (m - 1) * (m - 1);
  const u64 rows_per_flush =
      term == 0 ? std::numeric_limits<u64>::max()
                : std::max<u64>(1, (std::numeric_limits<u64>::max() - (m - 1)) / term);

  std::vector<u64> acc(out_len, 0);
  u64 pending = 0;
  for (std::size_t i = 0; i < a.size() && i + shift < out_len; ++i) {
    if (a[i] == 0) continue;
    std::size_t len = std::min(tail.size(), out_len - i - shift);
    kernels::mul_acc(std::span<u64>(acc).subspan(i + shift, len), tail.first(len), a[i]);
    if (++pending == rows_per_flush) {
      for (u64& x : acc) x %= m;
      pending = 0;
    }
  }
  for (std::size_t k = 0; k < out_len; ++k) out[k] = acc[k] % m;
  return out;
}

Poly pow_truncated(std::span<const u64> f, unsigned n, std::size_t degree,
                   const PrimePowerModulus& modulus) {
  Poly result(degree + 1, 0);
  result[0] = modulus.reduce(1);
  Poly base(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(std::min(f.size(), degree + 1)));
  base.resize(degree + 1, 0);
  bool first = true;
  while (n) {
    if (n & 1) {
      result = first ? base : mul_truncated(result, base, degree, modulus);
      first = false;
    }
    n >>= 1;
    if (n) base = mul_truncated(base, base, degree, modulus);
  }
  return result;
}

}  // namespace supercong
