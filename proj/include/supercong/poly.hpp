#pragma once

// Truncated polynomial arithmetic over Z/p^r.
//
// Multiplication is the schoolbook O(N^2) product; moduli below 2^32 go
// through the SIMD multiply-accumulate kernels with lazy reduction, larger
// moduli use a scalar 128-bit path. mul_truncated is the single seam for a
// subquadratic method should the desk-scale cap ever be raised.

#include "supercong/modring.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace supercong {

using Poly = std::vector<u64>;

/// (a * b) mod x^(degree + 1), coefficients reduced mod `modulus`.
/// Inputs must already be reduced.
Poly mul_truncated(std::span<const u64> a, std::span<const u64> b, std::size_t degree,
                   const PrimePowerModulus& modulus);

/// f^n mod x^(degree + 1) by binary exponentiation; f^0 = 1.
Poly pow_truncated(std::span<const u64> f, unsigned n, std::size_t degree,
                   const PrimePowerModulus& modulus);

}  // namespace supercong
