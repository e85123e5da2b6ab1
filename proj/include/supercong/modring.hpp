#pragma once

// Arithmetic modulo a prime power p^r.
//
// Values are canonical representatives in [0, p^r). The modulus is limited to
// p^r < 2^63 so that products fit in an unsigned 128-bit intermediate; the
// hot loops in poly.cpp and mhs.cpp work on raw uint64_t words through the
// PrimePowerModulus helpers, while Residue is the checked value type used at
// API boundaries and in reports.

#include "supercong/bigint.hpp"
#include "supercong/errors.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace supercong {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(u64 n);

class PrimePowerModulus {
 public:
  /// Throws DomainError if p is not prime, r == 0, or p^r >= 2^63.
  PrimePowerModulus(u64 p, unsigned r);

  u64 prime() const noexcept { return p_; }
  unsigned exponent() const noexcept { return r_; }
  u64 value() const noexcept { return modulus_; }

  /// Same prime, different exponent.
  PrimePowerModulus with_exponent(unsigned r) const { return {p_, r}; }

  u64 reduce(u64 x) const noexcept { return x % modulus_; }
  u64 reduce_signed(i64 x) const noexcept {
    i64 m = static_cast<i64>(modulus_);
    i64 v = x % m;
    return static_cast<u64>(v < 0 ? v + m : v);
  }
  u64 reduce(const BigInt& x) const { return mod_u64(x, modulus_); }

  u64 add(u64 a, u64 b) const noexcept {
    u64 s = a + b;
    return s >= modulus_ ? s - modulus_ : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + modulus_ - b; }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : modulus_ - a; }
  u64 mul(u64 a, u64 b) const noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % modulus_);
  }
  u64 pow(u64 base, u64 e) const noexcept;

  /// Inverse of a unit; NonUnitError when p | x.
  u64 inv(u64 x) const;

  bool is_unit(u64 x) const noexcept { return x % p_ != 0; }

  friend bool operator==(const PrimePowerModulus&, const PrimePowerModulus&) = default;

 private:
  u64 p_;
  unsigned r_;
  u64 modulus_;
};

class Residue {
 public:
  Residue(u64 value, const PrimePowerModulus& modulus)
      : value_(modulus.reduce(value)), modulus_(modulus) {}

  static Residue from_signed(i64 value, const PrimePowerModulus& modulus) {
    return {modulus.reduce_signed(value), modulus};
  }
  static Residue zero(const PrimePowerModulus& m) { return {0, m}; }
  static Residue one(const PrimePowerModulus& m) { return {1, m}; }

  u64 value() const noexcept { return value_; }
  const PrimePowerModulus& modulus() const noexcept { return modulus_; }

  /// Representative in (-m/2, m/2], for display only.
  i64 signed_value() const noexcept;

  Residue operator+(const Residue& o) const { check(o); return {modulus_.add(value_, o.value_), modulus_}; }
  Residue operator-(const Residue& o) const { check(o); return {modulus_.sub(value_, o.value_), modulus_}; }
  Residue operator*(const Residue& o) const { check(o); return {modulus_.mul(value_, o.value_), modulus_}; }
  Residue operator-() const { return {modulus_.neg(value_), modulus_}; }
  Residue& operator+=(const Residue& o) { return *this = *this + o; }
  Residue& operator-=(const Residue& o) { return *this = *this - o; }
  Residue& operator*=(const Residue& o) { return *this = *this * o; }

  Residue pow(u64 e) const { return {modulus_.pow(value_, e), modulus_}; }

  /// Same value viewed modulo p^k for k <= current exponent.
  Residue reduce_to(unsigned k) const;

  friend bool operator==(const Residue& a, const Residue& b) {
    a.check(b);
    return a.value_ == b.value_;
  }

 private:
  void check(const Residue& o) const {
    if (!(modulus_ == o.modulus_)) throw ModulusMismatch("residues have different moduli");
  }

  u64 value_;
  PrimePowerModulus modulus_;
};

/// Membership of l in P_p, the positive integers not divisible by p.
bool is_unit(u64 l, const PrimePowerModulus& modulus);

Residue inv(const Residue& x);

/// num * den^{-1} mod p^r; NonUnitError when p divides the reduced denominator.
Residue rational_to_residue(const Rational& q, const PrimePowerModulus& modulus);

/// Exact C(n, k) reduced mod p^r. DomainError unless 0 <= k <= n.
Residue binomial_mod(i64 n, i64 k, const PrimePowerModulus& modulus);

/// Given c mod p^k, returns c * p^j as a residue mod p^(j+k), where
/// target.exponent() == j + k. Terms that carry an explicit p^j factor only
/// need their cofactor to precision p^k, and this is how every mixed-precision
/// right-hand side is assembled.
Residue scale_by_prime_power(const Residue& cofactor, unsigned j, const PrimePowerModulus& target);

std::string to_string(const Residue& x);

}  // namespace supercong
