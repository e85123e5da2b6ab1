#pragma once

// Slow, exact reference implementations used only by the tests. None of them
// share code paths with the library beyond BigInt/Rational and the final
// rational_to_residue reduction.

#include "supercong/bigint.hpp"
#include "supercong/modring.hpp"

#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using supercong::BigInt;
using supercong::Rational;
using supercong::u64;

inline bool trial_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline u64 ipow(u64 b, unsigned e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

inline u64 brute_inverse(u64 x, u64 m) {
  for (u64 y = 1; y < m; ++y) {
    if ((x % m) * y % m == 1) return y;
  }
  return 0;
}

/// Reduces a p-integral rational mod m by brute-force inversion of the
/// denominator.
inline u64 reduce(const Rational& q, u64 m) {
  BigInt num = supercong::numerator_of(q) % m;
  if (num < 0) num += m;
  u64 den = static_cast<u64>(supercong::denominator_of(q) % m);
  return static_cast<u64>(num) * brute_inverse(den, m) % m;
}

/// sum over N >= k_1 > ... > k_d > 0 of prod 1/k_i^{s_i}, optionally skipping
/// multiples of p.
inline Rational harmonic(u64 N, const std::vector<unsigned>& s, u64 p = 0, bool restricted = false) {
  // Suffix-free recursion on the last index: T(j, K) = sum over chains of the
  // last j exponents with all indices <= K.
  std::map<std::pair<std::size_t, u64>, Rational> memo;
  auto rec = [&](auto&& self, std::size_t j, u64 K) -> Rational {
    if (j == 0) return 1;
    if (K == 0) return 0;
    auto key = std::make_pair(j, K);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Rational total = self(self, j, K - 1);
    if (!(restricted && K % p == 0)) {
      BigInt kp = 1;
      for (unsigned e = 0; e < s[s.size() - j]; ++e) kp *= K;
      total += self(self, j - 1, K - 1) / Rational(kp);
    }
    memo[key] = total;
    return total;
  };
  return rec(rec, s.size(), N);
}

/// sum over l_1 + ... + l_n = N with p not dividing l_i (and l_i < bound when
/// given) of 1/(l_1 ... l_n), exactly.
inline Rational composition_sum(unsigned n, u64 N, u64 p, std::optional<u64> bound = {}) {
  std::map<std::pair<unsigned, u64>, Rational> memo;
  auto rec = [&](auto&& self, unsigned k, u64 rest) -> Rational {
    if (k == 0) return rest == 0 ? Rational(1) : Rational(0);
    if (rest < k) return 0;
    auto key = std::make_pair(k, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Rational total = 0;
    for (u64 l = 1; l + (k - 1) <= rest; ++l) {
      if (l % p == 0) continue;
      if (bound && l >= *bound) break;
      total += self(self, k - 1, rest - l) / Rational(BigInt(l));
    }
    memo[key] = total;
    return total;
  };
  return rec(rec, n, N);
}

/// Number of (x_1..x_n) with 0 <= x_i < p summing to target, by expanding
/// (1 + x + ... + x^{p-1})^n.
inline std::vector<BigInt> digit_counts(unsigned n, u64 p) {
  std::vector<BigInt> poly{1};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<BigInt> next(poly.size() + p - 1, 0);
    for (std::size_t a = 0; a < poly.size(); ++a) {
      for (u64 b = 0; b < p; ++b) next[a + b] += poly[a];
    }
    poly = std::move(next);
  }
  return poly;
}

/// Bernoulli numbers by the Akiyama-Tanigawa algorithm, converted to the
/// B_1 = -1/2 convention.
inline Rational bernoulli(unsigned k) {
  std::vector<Rational> a(k + 1);
  for (unsigned m = 0; m <= k; ++m) {
    a[m] = Rational(BigInt(1), BigInt(m + 1));
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(BigInt(j)) * (a[j - 1] - a[j]);
  }
  return k == 1 ? -a[0] : a[0];
}

/// Distinct-index sum over 0 < l_i < b p, p not dividing l_i, by nested loops.
inline Rational unordered(u64 b, const std::vector<unsigned>& alphas, u64 p) {
  const u64 limit = b * p;
  std::vector<u64> chosen;
  Rational total = 0;
  auto rec = [&](auto&& self, std::size_t depth, const Rational& acc) -> void {
    if (depth == alphas.size()) {
      total += acc;
      return;
    }
    for (u64 l = 1; l < limit; ++l) {
      if (l % p == 0) continue;
      bool used = false;
      for (u64 c : chosen) used = used || c == l;
      if (used) continue;
      chosen.push_back(l);
      BigInt lp = 1;
      for (unsigned e = 0; e < alphas[depth]; ++e) lp *= l;
      self(self, depth + 1, acc / Rational(lp));
      chosen.pop_back();
    }
  };
  rec(rec, 0, Rational(1));
  return total;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20241015);
  return gen;
}

}  // namespace oracle
