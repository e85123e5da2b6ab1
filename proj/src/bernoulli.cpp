#include "supercong/bernoulli.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace supercong {

namespace {

const std::vector<Rational>& exact_table() {
  static const std::vector<Rational> table = [] {
    std::vector<Rational> b(kBernoulliExactCap + 1);
    b[0] = 1;
    for (unsigned n = 1; n <= kBernoulliExactCap; ++n) {
      if (n > 1 && n % 2 == 1) continue;  // zero
      Rational s = 0;
      BigInt c = 1;  // C(n+1, j)
      for (unsigned j = 0; j < n; ++j) {
        if (!b[j].is_zero()) s += Rational(c) * b[j];
        c = c * (n + 1 - j) / (j + 1);
      }
      b[n] = -s / Rational(n + 1);
    }
    return b;
  }();
  return table;
}

std::vector<u64> build_mod_p_table(u64 p) {
  // Only B_0..B_{p-2} are p-integral below the first pole at p-1.
  PrimePowerModulus mod(p, 1);
  std::size_t count = p >= 2 ? p - 1 : 0;
  std::vector<u64> b(count, 0);
  if (count == 0) return b;
  b[0] = 1;
  // row holds C(n+1, j) mod p for j = 0..n+1.
  std::vector<u64> row{1, 1};
  for (std::size_t n = 1; n < count; ++n) {
    std::vector<u64> next(row.size() + 1, 1);
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = mod.add(row[j - 1], row[j]);
    row = std::move(next);
    if (n > 1 && n % 2 == 1) continue;
    u64 s = 0;
    for (std::size_t j = 0; j < n; ++j) s = mod.add(s, mod.mul(row[j], b[j]));
    b[n] = mod.neg(mod.mul(s, mod.inv(n + 1)));
  }
  return b;
}

}  // namespace

Rational bernoulli_exact(unsigned k) {
  if (k > kBernoulliExactCap) {
    throw DomainError("exact Bernoulli numbers are capped at k = " + std::to_string(kBernoulliExactCap));
  }
  return exact_table()[k];
}

std::span<const u64> bernoulli_table_mod_p(u64 p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  static std::mutex mutex;
  static std::map<u64, std::unique_ptr<const std::vector<u64>>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[p];
  if (!slot) slot = std::make_unique<const std::vector<u64>>(build_mod_p_table(p));
  return *slot;
}

Residue bernoulli_mod_p(unsigned k, u64 p) {
  PrimePowerModulus mod(p, 1);
  if (k > 0 && k % (p - 1) == 0) {
    throw PoleError("B_" + std::to_string(k) + " has p = " + std::to_string(p) + " in its denominator");
  }
  if (k > p - 2) {
    throw DomainError("B_" + std::to_string(k) + " mod " + std::to_string(p) + " needs k <= p - 2");
  }
  return {bernoulli_table_mod_p(p)[k], mod};
}

}  // namespace supercong
