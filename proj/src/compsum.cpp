#include "supercong/compsum.hpp"

#include "supercong/poly.hpp"

#include <atomic>

namespace supercong {

namespace {

std::atomic<std::uint64_t> evaluations{0};

u64 power(u64 base, unsigned e) {
  u64 v = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (v > UINT64_MAX / base) throw DomainError("target m * p^r overflows 64 bits");
    v *= base;
  }
  return v;
}

u64 checked_mul(u64 a, u64 b) {
  if (b != 0 && a > UINT64_MAX / b) throw DomainError("target m * p^r overflows 64 bits");
  return a * b;
}

bool admissible(u64 l, const CompSumSpec& spec) {
  return l % spec.p != 0 && (!spec.upper_bound || l < *spec.upper_bound);
}

}  // namespace

CompSumSpec CompSumSpec::s_type(unsigned n, u64 m, u64 p, unsigned r) {
  u64 pr = power(p, r);
  return CompSumSpec{n, checked_mul(m, pr), p, r, pr, m};
}

CompSumSpec CompSumSpec::r_type(unsigned n, u64 m, u64 p) {
  return CompSumSpec{n, checked_mul(m, p), p, 1, std::nullopt, m};
}

CompSumSpec CompSumSpec::unbounded(unsigned n, u64 m, u64 p, unsigned r) {
  return CompSumSpec{n, checked_mul(m, power(p, r)), p, r, std::nullopt, m};
}

std::string CompSumSpec::key() const {
  std::string k = "n=" + std::to_string(parts) + ";N=" + std::to_string(target) + ";bound=";
  k += upper_bound ? std::to_string(*upper_bound) : std::string("none");
  return k;
}

Residue comp_sum(const CompSumSpec& spec, const PrimePowerModulus& modulus) {
  if (spec.p != modulus.prime()) throw ModulusMismatch("spec prime differs from modulus prime");
  if (spec.parts == 0) throw DomainError("comp_sum needs at least one part");
  evaluations.fetch_add(1, std::memory_order_relaxed);
  const u64 N = spec.target;
  if (N < spec.parts) return Residue::zero(modulus);
  if (N > (u64{1} << 26)) throw ScaleError("comp_sum target exceeds 2^26");

  // Largest part is N - (n - 1).
  Poly f(N + 1, 0);
  for (u64 l = 1; l + spec.parts - 1 <= N; ++l) {
    if (admissible(l, spec)) f[l] = modulus.inv(l);
  }
  Poly power = pow_truncated(f, spec.parts, N, modulus);
  return {power[N], modulus};
}

Residue comp_sum_bruteforce(const CompSumSpec& spec, const PrimePowerModulus& modulus) {
  if (spec.p != modulus.prime()) throw ModulusMismatch("spec prime differs from modulus prime");
  if (spec.target > kBruteforceTargetCap) {
    throw ScaleError("brute-force composition sums are limited to N <= " + std::to_string(kBruteforceTargetCap));
  }
  std::vector<u64> inverse(spec.target + 1, 0);
  for (u64 l = 1; l <= spec.target; ++l) {
    if (admissible(l, spec)) inverse[l] = modulus.inv(l);
  }
  // The last part is forced, so each composition is visited once at depth n-1.
  auto rec = [&](auto&& self, unsigned left, u64 remaining) -> u64 {
    if (left == 1) return remaining >= 1 ? inverse[remaining] : 0;
    u64 acc = 0;
    for (u64 l = 1; l + (left - 1) <= remaining; ++l) {
      if (!inverse[l]) continue;
      u64 rest = self(self, left - 1, remaining - l);
      if (rest) acc = modulus.add(acc, modulus.mul(inverse[l], rest));
    }
    return acc;
  };
  if (spec.parts == 0) return {spec.target == 0 ? u64{1} : u64{0}, modulus};
  return {rec(rec, spec.parts, spec.target), modulus};
}

std::uint64_t comp_sum_evaluations() noexcept { return evaluations.load(std::memory_order_relaxed); }

BigInt count_solutions_exact(i64 a, u64 m, unsigned n, u64 p) {
  if (n == 0) throw DomainError("count_solutions needs n >= 1");
  const BigInt total = BigInt(m) * p - a;
  if (total < 0) return 0;
  BigInt count = 0;
  for (unsigned i = 0; i <= n; ++i) {
    BigInt rest = total - BigInt(i) * p;  // x_1 + ... + x_n = rest after forcing i of them >= p
    if (rest < 0) break;
    BigInt term = binomial(n, i) * binomial((rest + n - 1).convert_to<u64>(), n - 1);
    count += (i % 2) ? -term : term;
  }
  return count;
}

Residue count_solutions(i64 a, u64 m, unsigned n, u64 p, const PrimePowerModulus& modulus) {
  return {modulus.reduce(count_solutions_exact(a, m, n, p)), modulus};
}

Rational gamma_n(unsigned a, unsigned n) {
  if (a < 1 || a + 1 > n) {
    throw DomainError("gamma_n(a) needs 1 <= a <= n - 1 (a=" + std::to_string(a) + ", n=" + std::to_string(n) + ")");
  }
  Rational g(BigInt(1), BigInt(a) * binomial(n - 1, a));
  return a % 2 == 1 ? g : -g;
}

Residue beta_n(i64 a, u64 b, unsigned n, const PrimePowerModulus& modulus) {
  if (b == 0 || n == 0) throw DomainError("beta_n needs b >= 1 and n >= 1");
  i64 top = static_cast<i64>(b * modulus.prime()) - a + static_cast<i64>(n) - 1;
  return binomial_mod(top, static_cast<i64>(n) - 1, modulus);
}

}  // namespace supercong
