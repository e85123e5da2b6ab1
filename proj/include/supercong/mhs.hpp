#pragma once

#include "supercong/modring.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace supercong {

/// Exponent sequence (s_1, ..., s_d) of a multiple harmonic sum, or the
/// (alpha_1, ..., alpha_n) of an un-ordered sum. The default-constructed
/// composition is empty and acts as the unit: H_N(empty) = 1.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<unsigned> parts);
  Composition(std::initializer_list<unsigned> parts) : Composition(std::vector<unsigned>(parts)) {}

  /// Parses "1,1,2". Rejects empty input and zero parts.
  static Composition parse(std::string_view text);

  /// s repeated n times.
  static Composition repeated(unsigned s, unsigned n);

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t depth() const noexcept { return parts_.size(); }
  unsigned weight() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  std::string str() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// H_N(s) = sum over N >= k_1 > ... > k_d > 0 of prod k_i^{-s_i}, mod p^r.
/// NonUnitError if some k <= N is divisible by p.
Residue mhs(u64 N, const Composition& s, const PrimePowerModulus& modulus);

/// H^(p)_N(s): the same sum with every k_i restricted to P_p.
Residue mhs_restricted(u64 N, const Composition& s, const PrimePowerModulus& modulus);

/// sum over 0 < l < limit with p not dividing l of l^{-s}.
Residue restricted_power_sum(u64 limit, unsigned s, const PrimePowerModulus& modulus);

/// Largest alpha count accepted by unordered_sum (Bell(10) set partitions).
inline constexpr std::size_t kUnorderedSumMaxDepth = 10;

/// U_b(alpha_1, ..., alpha_n): sum over pairwise distinct l_1, ..., l_n in
/// (0, b*p) with p not dividing l_i, of prod l_i^{-alpha_i}.
///
/// Evaluated by Moebius inversion on the lattice of set partitions of
/// {1..n}: the distinct-index sum equals
///   sum_pi  prod_{B in pi} (-1)^{|B|-1} (|B|-1)!  P(sum_{i in B} alpha_i)
/// where P(s) is restricted_power_sum(b*p, s). All weights are integers, so no
/// division by multiplicities is needed and any p works.
Residue unordered_sum(u64 b, const Composition& alphas, const PrimePowerModulus& modulus);

/// Direct enumeration of distinct tuples; an independent check of
/// unordered_sum. ScaleError when the tuple count would exceed ~5e7.
Residue unordered_sum_direct(u64 b, const Composition& alphas, const PrimePowerModulus& modulus);

}  // namespace supercong
