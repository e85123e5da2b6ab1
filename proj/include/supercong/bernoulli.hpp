#pragma once

// Bernoulli numbers under the t/(e^t - 1) convention, so B_1 = -1/2.
// The other common convention (t/(1 - e^-t)) flips the sign of B_1 only, but
// it silently breaks the recurrence below; every caller here assumes -1/2.

#include "supercong/bigint.hpp"
#include "supercong/modring.hpp"

#include <cstdint>
#include <span>

namespace supercong {

inline constexpr unsigned kBernoulliExactCap = 120;

/// Exact B_k for 0 <= k <= 120 via sum_{j=0}^{n} C(n+1, j) B_j = 0.
/// DomainError above the cap.
Rational bernoulli_exact(unsigned k);

/// B_k mod p. Valid for k <= p - 2; PoleError when k > 0 and (p - 1) | k,
/// DomainError for larger k. Backed by a per-prime table computed with the
/// same recurrence carried out in Z/pZ.
Residue bernoulli_mod_p(unsigned k, u64 p);

/// B_0 .. B_{p-2} mod p. The entry at p - 1 is never produced.
std::span<const u64> bernoulli_table_mod_p(u64 p);

}  // namespace supercong
