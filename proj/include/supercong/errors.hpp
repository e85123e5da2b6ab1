#pragma once

#include <stdexcept>
#include <string>

namespace supercong {

// Argument outside an operation's documented domain (k > n in a binomial,
// a composite "prime", an exponent of zero, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Division by a residue divisible by p.
class NonUnitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// B_k mod p requested where the denominator of B_k is divisible by p.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds a guard meant to keep brute-force paths tractable.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModulusMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace supercong
