#pragma once

// Restricted composition sums
//
//   sum over l_1 + ... + l_n = N, l_i in P_p (and l_i < bound if present)
//   of 1 / (l_1 ... l_n)
//
// which cover S_n^(m)(p^r) (bound p^r, N = m p^r), R_n^(m)(p) (no bound,
// N = m p) and the unbounded sums at N = m p^r. Also the lattice counts
// C^(m)_{a,p}(n) and the beta/gamma constants that relate them.

#include "supercong/bigint.hpp"
#include "supercong/modring.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace supercong {

struct CompSumSpec {
  unsigned parts = 1;                 // n
  u64 target = 0;                     // N
  u64 p = 2;
  unsigned r = 1;                     // evaluation modulus is p^r unless overridden
  std::optional<u64> upper_bound;     // strict bound on every part
  u64 m = 0;                          // multiplier, informational (0 when N is arbitrary)

  /// S_n^(m)(p^r): N = m p^r, parts < p^r.
  static CompSumSpec s_type(unsigned n, u64 m, u64 p, unsigned r);
  /// R_n^(m)(p): N = m p, no bound, evaluated mod p.
  static CompSumSpec r_type(unsigned n, u64 m, u64 p);
  /// N = m p^r with no bound on the parts.
  static CompSumSpec unbounded(unsigned n, u64 m, u64 p, unsigned r);

  /// Stable text form, used as the cache key.
  std::string key() const;
};

/// Coefficient of x^N in f(x)^n with f = sum of inv(l) x^l over admissible l,
/// via binary powering of truncated polynomials. Empty sums give 0.
Residue comp_sum(const CompSumSpec& spec, const PrimePowerModulus& modulus);
inline Residue comp_sum(const CompSumSpec& spec) { return comp_sum(spec, PrimePowerModulus(spec.p, spec.r)); }

/// Recursive enumeration of every admissible composition. ScaleError when N > 60.
Residue comp_sum_bruteforce(const CompSumSpec& spec, const PrimePowerModulus& modulus);
inline Residue comp_sum_bruteforce(const CompSumSpec& spec) {
  return comp_sum_bruteforce(spec, PrimePowerModulus(spec.p, spec.r));
}

inline constexpr u64 kBruteforceTargetCap = 60;

/// Number of comp_sum evaluations since process start (cache hits excluded).
std::uint64_t comp_sum_evaluations() noexcept;

/// Exact number of solutions of x_1 + ... + x_n = m p - a with 0 <= x_i < p,
/// by inclusion-exclusion.
BigInt count_solutions_exact(i64 a, u64 m, unsigned n, u64 p);

/// C^(m)_{a,p}(n) reduced mod the given modulus.
Residue count_solutions(i64 a, u64 m, unsigned n, u64 p, const PrimePowerModulus& modulus);

/// gamma_n(a) = (-1)^(a-1) / (a C(n-1, a)), for 1 <= a <= n - 1.
Rational gamma_n(unsigned a, unsigned n);

/// beta_n(a, b) = C(b p - a + n - 1, n - 1) mod the modulus.
Residue beta_n(i64 a, u64 b, unsigned n, const PrimePowerModulus& modulus);

}  // namespace supercong
