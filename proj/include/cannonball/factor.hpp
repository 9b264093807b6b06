#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cannonball/arith.hpp"

namespace cannonball {

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// A positive integer together with its complete prime factorization.
/// Primes are strictly increasing and every exponent is at least 1.
class FactoredInteger {
 public:
  FactoredInteger() : value_(1) {}
  FactoredInteger(Integer value, std::vector<PrimePower> factors);

  const Integer& value() const { return value_; }
  std::span<const PrimePower> factors() const { return factors_; }

  /// Exponent of p in the value (0 when p does not divide it).
  unsigned exponent_of(const Integer& p) const;

  /// Product of prime^exponent over all factors.
  Integer product() const;

  bool operator==(const FactoredInteger&) const = default;

 private:
  Integer value_;
  std::vector<PrimePower> factors_;
};

/// Deterministic primality test. Below 3.3e24 this is Miller-Rabin with the
/// first thirteen prime bases, which is exact there; larger candidates must
/// also carry a Lucas certificate built from a factorization of n-1.
bool is_prime(const Integer& n);

/// Complete factorization: trial division by the primes below 10⁶, then
/// Pollard-Brent rho on the remaining cofactor. Throws std::invalid_argument
/// for n < 1.
FactoredInteger factorize(const Integer& n);

/// Merge factorizations of coprime-or-not parts into the factorization of
/// their product.
FactoredInteger multiply(std::span<const FactoredInteger> parts);

/// All positive divisors, ascending.
std::vector<Integer> divisors(const FactoredInteger& n);

/// Largest e with p^e | n. Throws std::invalid_argument if n < 1 or p is not prime.
unsigned valuation(const Integer& n, const Integer& p);

/// Primes up to and including limit, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace cannonball
