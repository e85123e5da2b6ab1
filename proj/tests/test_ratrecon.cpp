#include "doctest.h"
#include "oracles.hpp"

#include "supercong/ratrecon.hpp"

using namespace supercong;

namespace {

std::vector<ResidueObservation> images(const Rational& q, const std::vector<u64>& primes) {
  std::vector<ResidueObservation> out;
  for (u64 p : primes) out.push_back({p, rational_to_residue(q, PrimePowerModulus(p, 1)).value()});
  return out;
}

}  // namespace

TEST_SUITE("ratrecon") {

TEST_CASE("CRT worked values") {
  std::vector<ResidueObservation> two{{3, 2}, {5, 3}};
  auto c = crt_combine(two);
  CHECK(c.value == 8);
  CHECK(c.modulus == 15);
  std::vector<ResidueObservation> one{{7, 4}};
  CHECK(crt_combine(one).value == 4);
  auto minus_two = images(Rational(-2), {7, 11, 13});
  CHECK(crt_combine(minus_two).value == 1001 - 2);
  std::vector<ResidueObservation> none;
  CHECK(crt_combine(none).modulus == 1);
  std::vector<ResidueObservation> dup{{7, 1}, {7, 2}};
  CHECK_THROWS_AS(crt_combine(dup), DuplicatePrimeError);
}

TEST_CASE("CRT result reduces back to every observation") {
  auto& gen = oracle::rng();
  std::vector<u64> primes{11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ResidueObservation> obs;
    for (u64 p : primes) obs.push_back({p, gen() % p});
    auto c = crt_combine(obs);
    CHECK(c.value < c.modulus);
    for (const auto& o : obs) CHECK(mod_u64(c.value, o.p) == o.value);
  }
}

TEST_CASE("reconstruction worked values") {
  auto r = reconstruct(BigInt(1001 - 2), BigInt(1001));
  REQUIRE(r.found());
  CHECK(r.candidate == -2);
  auto c = crt_combine(images(Rational(-1, 30), {11, 13, 17}));
  auto q = reconstruct(c.value, c.modulus);
  REQUIRE(q.found());
  CHECK(q.candidate == Rational(-1, 30));
  CHECK(q.bound == 34);  // floor(sqrt(2431 / 2))
  CHECK(reconstruct(BigInt(0), BigInt(11)).candidate == 0);
}

TEST_CASE("round trip for small fractions over four primes") {
  std::vector<u64> primes{53, 59, 61, 67};
  for (i64 a = -50; a <= 50; ++a) {
    for (i64 b = 1; b <= 50; ++b) {
      Rational q(a, b);
      if (denominator_of(q) != b) continue;  // visit each reduced fraction once
      auto c = crt_combine(images(q, primes));
      auto r = reconstruct(c.value, c.modulus);
      REQUIRE(r.found());
      REQUIRE(r.candidate == q);
    }
  }
}

TEST_CASE("fractions beyond the bound are not returned as themselves") {
  std::vector<u64> primes{11, 13};
  Rational q(1000, 999);
  auto c = crt_combine(images(q, primes));
  auto r = reconstruct(c.value, c.modulus);
  CHECK((!r.found() || r.candidate != q));
  CHECK(r.bound == 8);
}

TEST_CASE("hunting known constants") {
  auto q3 = hunt_constant(ConstantFamily::q_d, 3, 1, std::vector<u64>{7, 11, 13, 17, 19, 23, 29, 31});
  REQUIRE(q3.result.found());
  CHECK(q3.result.candidate == -2);
  CHECK(q3.held_out == 2);
  auto c72 = hunt_constant(ConstantFamily::c_dm, 7, 2, std::vector<u64>{11, 13, 17, 19, 23, 29, 31});
  REQUIRE(c72.result.found());
  CHECK(c72.result.candidate == 3);
  auto r52 = hunt_constant(ConstantFamily::c_dm_r, 5, 2, std::vector<u64>{11, 13, 17, 19, 23, 29, 31});
  REQUIRE(r52.result.found());
  CHECK(r52.result.candidate == -3);
}

TEST_CASE("adding primes keeps a correct constant found") {
  std::vector<u64> primes{11, 13, 17, 19, 23};
  for (u64 next : {29, 31, 37, 41, 43}) {
    primes.push_back(next);
    auto h = hunt_constant(ConstantFamily::c_dm, 5, 2, primes);
    REQUIRE(h.result.found());
    CHECK(h.result.candidate == 2);
  }
}

TEST_CASE("primes that carry no information are skipped with a reason") {
  // 37 divides the numerator of B_32, the normalizer for d = 5
  auto h = hunt_constant(ConstantFamily::c_dm, 5, 1, std::vector<u64>{3, 5, 11, 13, 37, 41});
  CHECK(h.observations.size() == 3);
  REQUIRE(h.skipped.size() == 3);
  CHECK(h.skipped[0].p == 3);
  CHECK(h.skipped[2].p == 37);
  CHECK_THROWS_AS(hunt_constant(ConstantFamily::q_d, 9, 1, std::vector<u64>{5, 7, 11}), InsufficientDataError);
}

TEST_CASE("a candidate contradicted by a held-out prime is rejected") {
  auto h = hunt_constant(ConstantFamily::q_d, 9, 1, std::vector<u64>{11, 13, 17, 19});
  CHECK_FALSE(h.result.found());
  CHECK(h.held_out == 2);
  CHECK(h.result.bound > 0);
}

TEST_CASE("family names") {
  CHECK(parse_family("qd") == ConstantFamily::q_d);
  CHECK(family_name(parse_family("cprime")) == "cprime");
  CHECK_THROWS_AS(parse_family("zeta"), DomainError);
}

}  // TEST_SUITE
