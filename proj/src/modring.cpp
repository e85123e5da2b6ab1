#include "supercong/modring.hpp"

#include <array>
#include <limits>

namespace supercong {

namespace {

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : bases) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : bases) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimePowerModulus::PrimePowerModulus(u64 p, unsigned r) : p_(p), r_(r), modulus_(1) {
  if (!is_prime(p)) throw DomainError("modulus base " + std::to_string(p) + " is not prime");
  if (r == 0) throw DomainError("prime power exponent must be at least 1");
  constexpr u64 limit = u64{1} << 63;
  for (unsigned i = 0; i < r; ++i) {
    if (modulus_ > (limit - 1) / p) {
      throw DomainError(std::to_string(p) + "^" + std::to_string(r) + " exceeds 2^63");
    }
    modulus_ *= p;
  }
}

u64 PrimePowerModulus::pow(u64 base, u64 e) const noexcept { return powmod64(base, e, modulus_); }

u64 PrimePowerModulus::inv(u64 x) const {
  x %= modulus_;
  if (x % p_ == 0) {
    throw NonUnitError(std::to_string(x) + " is not invertible mod " + std::to_string(modulus_));
  }
  // Extended Euclid on signed 128-bit to keep the cofactors exact.
  __int128 r0 = modulus_, r1 = x, s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  __int128 m = modulus_;
  __int128 v = s0 % m;
  if (v < 0) v += m;
  return static_cast<u64>(v);
}

i64 Residue::signed_value() const noexcept {
  u64 m = modulus_.value();
  if (value_ > m / 2) return -static_cast<i64>(m - value_);
  return static_cast<i64>(value_);
}

Residue Residue::reduce_to(unsigned k) const {
  if (k == 0 || k > modulus_.exponent()) {
    throw DomainError("cannot reduce a residue mod p^" + std::to_string(modulus_.exponent()) +
                      " to p^" + std::to_string(k));
  }
  PrimePowerModulus target = modulus_.with_exponent(k);
  return {value_, target};
}

bool is_unit(u64 l, const PrimePowerModulus& modulus) { return modulus.is_unit(l); }

Residue inv(const Residue& x) { return {x.modulus().inv(x.value()), x.modulus()}; }

Residue rational_to_residue(const Rational& q, const PrimePowerModulus& modulus) {
  u64 den = modulus.reduce(denominator_of(q));
  if (!modulus.is_unit(den)) {
    throw NonUnitError("denominator of " + to_string(q) + " is divisible by " +
                       std::to_string(modulus.prime()));
  }
  u64 num = modulus.reduce(numerator_of(q));
  return {modulus.mul(num, modulus.inv(den)), modulus};
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    c *= (n - i);
    c /= (i + 1);
  }
  return c;
}

Residue binomial_mod(i64 n, i64 k, const PrimePowerModulus& modulus) {
  if (k < 0 || n < 0 || k > n) {
    throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                      ") outside 0 <= k <= n");
  }
  return {modulus.reduce(binomial(static_cast<u64>(n), static_cast<u64>(k))), modulus};
}

Residue scale_by_prime_power(const Residue& cofactor, unsigned j, const PrimePowerModulus& target) {
  if (cofactor.modulus().prime() != target.prime()) throw ModulusMismatch("different primes");
  if (target.exponent() > j + cofactor.modulus().exponent()) {
    throw DomainError("cofactor precision p^" + std::to_string(cofactor.modulus().exponent()) +
                      " is too low for p^" + std::to_string(j) + " * c mod p^" +
                      std::to_string(target.exponent()));
  }
  if (j >= target.exponent()) return Residue::zero(target);
  u64 scale = 1;
  for (unsigned i = 0; i < j; ++i) scale *= target.prime();
  return {target.mul(target.reduce(cofactor.value()), scale), target};
}

std::string to_string(const Residue& x) {
  return std::to_string(x.value()) + " (mod " + std::to_string(x.modulus().value()) + ")";
}

}  // namespace supercong
