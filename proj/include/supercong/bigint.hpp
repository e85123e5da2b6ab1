#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace supercong {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Non-negative remainder of x modulo m (m > 0).
inline std::uint64_t mod_u64(const BigInt& x, std::uint64_t m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

/// "a/b" or "a" when the denominator is one.
inline std::string to_string(const Rational& q) {
  if (denominator_of(q) == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline std::string to_string(const BigInt& x) { return x.str(); }

/// Exact binomial coefficient; zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace supercong
