#include "supercong/ratrecon.hpp"

#include "supercong/bernoulli.hpp"
#include "supercong/compsum.hpp"

#include <boost/integer/common_factor.hpp>

#include <set>

namespace supercong {

namespace {

BigInt mod_floor(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

CrtResult crt_combine(std::span<const ResidueObservation> observations) {
  std::set<u64> seen;
  BigInt value = 0, modulus = 1;
  for (const auto& obs : observations) {
    if (!seen.insert(obs.p).second) throw DuplicatePrimeError("prime " + std::to_string(obs.p) + " observed twice");
    PrimePowerModulus mod(obs.p, 1);
    // value + modulus * t = obs.value (mod p)
    u64 gap = mod.sub(mod.reduce(obs.value), mod.reduce(value));
    u64 t = mod.mul(gap, mod.inv(mod.reduce(modulus)));
    value += modulus * t;
    modulus *= obs.p;
  }
  return {value, modulus};
}

ReconstructionResult reconstruct(const BigInt& value, const BigInt& M) {
  ReconstructionResult out;
  out.combined_modulus = M;
  out.bound = boost::multiprecision::sqrt(BigInt(M / 2));
  if (M <= 1) return out;

  // Remainders r_i with cofactors t_i satisfy r_i = t_i * value (mod M).
  BigInt r0 = M, r1 = mod_floor(value, M);
  BigInt t0 = 0, t1 = 1;
  while (r1 > out.bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    BigInt t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return out;
  BigInt den = abs(t1);
  if (den > out.bound) return out;
  BigInt num = t1 < 0 ? BigInt(-r1) : r1;
  if (boost::integer::gcd(num, den) != 1 && num != 0) return out;
  if (boost::integer::gcd(den, M) != 1) return out;
  out.status = ReconstructionResult::Status::found;
  out.candidate = Rational(num, den);
  return out;
}

ConstantFamily parse_family(const std::string& name) {
  if (name == "qd") return ConstantFamily::q_d;
  if (name == "c") return ConstantFamily::c_dm;
  if (name == "cprime") return ConstantFamily::c_dm_r;
  throw DomainError("unknown constant family '" + name + "' (expected qd, c or cprime)");
}

std::string family_name(ConstantFamily family) {
  switch (family) {
    case ConstantFamily::q_d: return "qd";
    case ConstantFamily::c_dm: return "c";
    case ConstantFamily::c_dm_r: return "cprime";
  }
  return "?";
}

HuntResult hunt_constant(ConstantFamily family, unsigned d, u64 m, std::span<const u64> primes) {
  HuntResult out;
  for (u64 p : primes) {
    if (!is_prime(p)) continue;
    if (p <= d) {
      out.skipped.push_back({p, "needs p > d"});
      continue;
    }
    PrimePowerModulus mod_p(p, 1);
    u64 bern = bernoulli_mod_p(p - d, p).value();
    u64 norm = bern;
    if (family != ConstantFamily::q_d) {
      u64 fact = 1;
      for (unsigned i = 2; i < d; ++i) fact = mod_p.mul(fact, i);
      norm = mod_p.mul(norm, fact);
    }
    if (norm == 0) {
      out.skipped.push_back({p, "normalizing Bernoulli factor vanishes mod p"});
      continue;
    }
    u64 lhs = 0;
    if (family == ConstantFamily::q_d) {
      PrimePowerModulus mod_p2(p, 2);
      u64 sum = comp_sum(CompSumSpec::unbounded(d, m, p, 2), mod_p2).value();
      if (sum % p != 0) {
        out.skipped.push_back({p, "sum at p^2 is not divisible by p"});
        continue;
      }
      lhs = sum / p;
    } else if (family == ConstantFamily::c_dm) {
      lhs = comp_sum(CompSumSpec::s_type(d, m, p, 1), mod_p).value();
    } else {
      lhs = comp_sum(CompSumSpec::r_type(d, m, p), mod_p).value();
    }
    out.observations.push_back({p, mod_p.mul(lhs, mod_p.inv(norm))});
  }
  if (out.observations.size() < 2) {
    throw InsufficientDataError("constant hunt needs at least two usable primes, got " +
                                std::to_string(out.observations.size()));
  }
  const std::size_t total = out.observations.size();
  out.held_out = total >= 4 ? 2 : total == 3 ? 1 : 0;
  std::span<const ResidueObservation> all(out.observations);
  CrtResult crt = crt_combine(all.first(total - out.held_out));
  out.result = reconstruct(crt.value, crt.modulus);
  if (out.result.found()) {
    const Rational& q = out.result.candidate;
    for (const auto& obs : all.last(out.held_out)) {
      PrimePowerModulus mod_p(obs.p, 1);
      if (denominator_of(q) % obs.p == 0 || rational_to_residue(q, mod_p).value() != obs.value) {
        out.rejected = q;
        out.result.status = ReconstructionResult::Status::not_found;
        out.result.candidate = 0;
        break;
      }
    }
  }
  return out;
}

}  // namespace supercong
