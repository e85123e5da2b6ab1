#pragma once

// Recovering rational constants from their images modulo many primes.
//
// Observations mod p are combined by CRT into a residue mod M = prod p, then
// a fraction num/den with |num|, den <= floor(sqrt(M/2)) is sought with the
// half-extended Euclidean algorithm. Inside that bound the answer is unique,
// so "not found" is a statement about the bound, which is reported with it.
// This replaces real/p-adic PSLQ with an exact modular procedure.

#include "supercong/bigint.hpp"
#include "supercong/modring.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace supercong {

struct ResidueObservation {
  u64 p;
  u64 value;  // in [0, p)
};

struct CrtResult {
  BigInt value;
  BigInt modulus;
};

class DuplicatePrimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unique residue mod prod p agreeing with every observation.
/// DuplicatePrimeError on repeated primes; an empty list gives 0 mod 1.
CrtResult crt_combine(std::span<const ResidueObservation> observations);

struct ReconstructionResult {
  enum class Status { found, not_found };
  Status status = Status::not_found;
  Rational candidate;  // meaningful when found
  BigInt combined_modulus;
  BigInt bound;

  bool found() const noexcept { return status == Status::found; }
};

/// Bounded rational reconstruction of value mod M (0 <= value < M).
ReconstructionResult reconstruct(const BigInt& value, const BigInt& M);

/// Which normalized constant to hunt.
enum class ConstantFamily {
  q_d,      // sum over l_1+..+l_d = p^2 in P_p  /  (p B_{p-d})          mod p
  c_dm,     // S_d^(m)(p)  /  ((d-1)! B_{p-d})                          mod p
  c_dm_r,   // R_d^(m)(p)  /  ((d-1)! B_{p-d})                          mod p
};

ConstantFamily parse_family(const std::string& name);
std::string family_name(ConstantFamily family);

struct SkippedPrime {
  u64 p;
  std::string reason;
};

struct HuntResult {
  ReconstructionResult result;  // over the fitting primes only
  std::vector<ResidueObservation> observations;
  std::vector<SkippedPrime> skipped;
  std::size_t held_out = 0;     // trailing observations kept back for the check
  std::optional<Rational> rejected;  // candidate that failed a held-out prime
};

/// Builds one observation per usable prime, combines and reconstructs.
/// Primes with p <= d, or where the normalizing factor vanishes mod p, are
/// skipped with a reason. InsufficientDataError with fewer than two usable
/// primes.
///
/// A fraction within the bound exists for most residues, so a candidate is
/// only accepted if it also matches the last one or two observations, which
/// are left out of the fit (two with four or more observations, one with
/// three). A mismatch turns the result into not-found and keeps the
/// candidate in `rejected`.
HuntResult hunt_constant(ConstantFamily family, unsigned d, u64 m, std::span<const u64> primes);

}  // namespace supercong
