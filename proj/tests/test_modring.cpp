#include "doctest.h"
#include "oracles.hpp"

#include "supercong/modring.hpp"

using namespace supercong;

TEST_SUITE("modring") {

TEST_CASE("primality agrees with trial division below 5000") {
  for (u64 n = 0; n < 5000; ++n) CHECK_MESSAGE(is_prime(n) == oracle::trial_prime(n), n);
  CHECK(is_prime(2305843009213693951ULL));   // 2^61 - 1
  CHECK_FALSE(is_prime(3215031751ULL));       // strong pseudoprime to 2, 3, 5, 7
  CHECK_FALSE(is_prime(18446744073709551557ULL - 2));
  CHECK(is_prime(18446744073709551557ULL));   // largest prime below 2^64
}

TEST_CASE("modulus construction rejects bad input") {
  CHECK_THROWS_AS(PrimePowerModulus(9, 1), DomainError);
  CHECK_THROWS_AS(PrimePowerModulus(7, 0), DomainError);
  CHECK_THROWS_AS(PrimePowerModulus(1, 1), DomainError);
  CHECK_THROWS_AS(PrimePowerModulus(2, 63), DomainError);
  CHECK_NOTHROW(PrimePowerModulus(2, 62));
  PrimePowerModulus m(7, 3);
  CHECK(m.value() == 343);
  CHECK(m.with_exponent(1).value() == 7);
}

TEST_CASE("unit membership") {
  CHECK_FALSE(is_unit(7, PrimePowerModulus(7, 1)));
  CHECK(is_unit(8, PrimePowerModulus(7, 2)));
  CHECK_FALSE(is_unit(49, PrimePowerModulus(7, 2)));
}

TEST_CASE("inverse examples") {
  PrimePowerModulus m25(5, 2);
  CHECK(inv(Residue(1, m25)).value() == 1);
  CHECK(inv(Residue(3, m25)).value() == 17);
  CHECK_THROWS_AS(inv(Residue(5, m25)), NonUnitError);
}

TEST_CASE("every unit times its inverse is one, for moduli up to 10^4") {
  for (u64 p : {2, 3, 5, 7, 11, 13, 97}) {
    for (unsigned r = 1; oracle::ipow(p, r) <= 10000; ++r) {
      PrimePowerModulus M(p, r);
      for (u64 x = 1; x < M.value(); ++x) {
        if (x % p == 0) {
          CHECK_THROWS_AS(M.inv(x), NonUnitError);
          continue;
        }
        REQUIRE(M.mul(x, M.inv(x)) == 1);
      }
    }
  }
}

TEST_CASE("arithmetic near the 2^63 limit matches 128-bit reference") {
  PrimePowerModulus M(2305843009213693951ULL, 1);
  auto& gen = oracle::rng();
  for (int i = 0; i < 2000; ++i) {
    u64 a = gen() % M.value(), b = gen() % M.value();
    CHECK(M.mul(a, b) == static_cast<u64>(static_cast<u128>(a) * b % M.value()));
    CHECK(M.add(a, b) == static_cast<u64>((static_cast<u128>(a) + b) % M.value()));
    CHECK(M.add(M.sub(a, b), b) == a);
  }
  CHECK(M.pow(3, M.value() - 1) == 1);
}

TEST_CASE("rational reduction examples") {
  CHECK(rational_to_residue(Rational(-2), PrimePowerModulus(7, 1)).value() == 5);
  CHECK(rational_to_residue(Rational(1, 3), PrimePowerModulus(11, 1)).value() == 4);
  CHECK(rational_to_residue(Rational(-1, 30), PrimePowerModulus(11, 1)).value() == 4);
  CHECK_THROWS_AS(rational_to_residue(Rational(1, 22), PrimePowerModulus(11, 2)), NonUnitError);
  // p in the numerator cancels a p in the denominator first
  CHECK(rational_to_residue(Rational(11, 22), PrimePowerModulus(11, 2)).value() == 61);
}

TEST_CASE("rational reduction is a ring homomorphism on p-integral rationals") {
  PrimePowerModulus M(13, 3);
  auto& gen = oracle::rng();
  for (int i = 0; i < 500; ++i) {
    auto draw = [&] {
      i64 num = static_cast<i64>(gen() % 2001) - 1000;
      i64 den = 1 + static_cast<i64>(gen() % 500);
      if (den % 13 == 0) ++den;
      return Rational(num, den);
    };
    Rational a = draw(), b = draw();
    CHECK(rational_to_residue(a + b, M) == rational_to_residue(a, M) + rational_to_residue(b, M));
    CHECK(rational_to_residue(a * b, M) == rational_to_residue(a, M) * rational_to_residue(b, M));
    CHECK(rational_to_residue(a, M).value() == oracle::reduce(a, M.value()));
  }
}

TEST_CASE("binomial residues") {
  CHECK(binomial_mod(6, 0, PrimePowerModulus(3, 1)).value() == 1);
  CHECK(binomial_mod(10, 3, PrimePowerModulus(7, 2)).value() == 22);
  CHECK(binomial_mod(16, 6, PrimePowerModulus(11, 2)).value() == 22);
  CHECK_THROWS_AS(binomial_mod(4, 5, PrimePowerModulus(3, 1)), DomainError);
  CHECK_THROWS_AS(binomial_mod(4, -1, PrimePowerModulus(3, 1)), DomainError);
}

TEST_CASE("binomial residues match exact values and Pascal's rule up to n = 200") {
  for (auto [p, r] : {std::pair<u64, unsigned>{2, 10}, {3, 4}, {7, 3}, {11, 2}, {199, 1}}) {
    PrimePowerModulus M(p, r);
    for (i64 n = 0; n <= 200; ++n) {
      for (i64 k = 0; k <= n; ++k) {
        Residue b = binomial_mod(n, k, M);
        REQUIRE(b.value() == mod_u64(binomial(n, k), M.value()));
        if (n > 0 && k > 0 && k < n) {
          REQUIRE(b == binomial_mod(n - 1, k - 1, M) + binomial_mod(n - 1, k, M));
        }
      }
    }
  }
}

TEST_CASE("residues with different moduli do not mix") {
  Residue a(1, PrimePowerModulus(5, 1)), b(1, PrimePowerModulus(5, 2));
  CHECK_THROWS_AS(a + b, ModulusMismatch);
  CHECK_THROWS_AS((void)(a == b), ModulusMismatch);
}

TEST_CASE("signed display and reduction to lower exponent") {
  PrimePowerModulus M(7, 2);
  CHECK(Residue::from_signed(-3, M).value() == 46);
  CHECK(Residue::from_signed(-3, M).signed_value() == -3);
  CHECK(Residue(46, M).reduce_to(1).value() == 4);
  CHECK(to_string(Residue(5, M)) == "5 (mod 49)");
}

TEST_CASE("scaling by a prime power lifts the cofactor") {
  PrimePowerModulus p1(11, 1), p3(11, 3);
  Residue c(4, p1);
  CHECK(scale_by_prime_power(c, 2, p3).value() == 4 * 121);
  CHECK(scale_by_prime_power(Residue(5, PrimePowerModulus(11, 2)), 0, PrimePowerModulus(11, 2)).value() == 5);
  CHECK_THROWS(scale_by_prime_power(c, 1, p3));
}

}  // TEST_SUITE
