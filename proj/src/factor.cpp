#include "cannonball/factor.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace cannonball {
namespace {

constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(kTrialDivisionLimit);
  return primes;
}

Integer pow_mod(const Integer& base, const Integer& exponent, const Integer& modulus) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

// Strong probable-prime test to a single base; n odd and > base.
bool strong_probable_prime(const Integer& n, unsigned long base) {
  Integer d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  Integer x = pow_mod(Integer{base}, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

constexpr std::array<unsigned long, 13> kWitnessBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Miller-Rabin with the bases above is exact for n below this bound.
const Integer& deterministic_mr_bound() {
  static const Integer bound{"3317044064679887385961981"};
  return bound;
}

bool lucas_certificate(const Integer& n) {
  FactoredInteger n_minus_1 = factorize(n - 1);
  for (const auto& [q, e] : n_minus_1.factors()) {
    Integer cofactor = (n - 1) / q;
    bool witnessed = false;
    for (unsigned long a = 2; a < 1000 && !witnessed; ++a) {
      if (pow_mod(Integer{a}, n - 1, n) != 1) return false;
      witnessed = pow_mod(Integer{a}, cofactor, n) != 1;
    }
    if (!witnessed) return false;
  }
  return true;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Pollard-Brent rho; n is composite, odd and free of factors below the trial bound.
Integer rho_factor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    auto f = [&](const Integer& x) { return Integer{(x * x + c) % n}; };
    Integer y = 2;
    Integer x = 2;
    Integer ys;
    Integer g = 1;
    Integer q = 1;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += kBatch;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = rho_factor(n);
  split_into(d, out);
  split_into(n / d, out);
}

}  // namespace

FactoredInteger::FactoredInteger(Integer value, std::vector<PrimePower> factors)
    : value_(std::move(value)), factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].exponent == 0) throw std::invalid_argument("FactoredInteger: zero exponent");
    if (i > 0 && factors_[i - 1].prime >= factors_[i].prime)
      throw std::invalid_argument("FactoredInteger: primes must be strictly increasing");
  }
  if (product() != value_) throw std::invalid_argument("FactoredInteger: factors do not multiply to value");
}

unsigned FactoredInteger::exponent_of(const Integer& p) const {
  for (const auto& f : factors_)
    if (f.prime == p) return f.exponent;
  return 0;
}

Integer FactoredInteger::product() const {
  Integer result = 1;
  for (const auto& [p, e] : factors_) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    result *= pe;
  }
  return result;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long p : kWitnessBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  for (unsigned long base : kWitnessBases)
    if (!strong_probable_prime(n, base)) return false;
  if (n < deterministic_mr_bound()) return true;
  return lucas_certificate(n);
}

FactoredInteger factorize(const Integer& n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
  std::map<Integer, unsigned> found;
  Integer rest = n;
  for (std::uint64_t p : small_primes()) {
    if (Integer{static_cast<unsigned long>(p)} * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++found[Integer{static_cast<unsigned long>(p)}];
    }
  }
  split_into(rest, found);

  std::vector<PrimePower> factors;
  factors.reserve(found.size());
  for (auto& [p, e] : found) factors.push_back({p, e});
  return FactoredInteger{n, std::move(factors)};
}

FactoredInteger multiply(std::span<const FactoredInteger> parts) {
  std::map<Integer, unsigned> merged;
  Integer value = 1;
  for (const auto& part : parts) {
    value *= part.value();
    for (const auto& [p, e] : part.factors()) merged[p] += e;
  }
  std::vector<PrimePower> factors;
  for (auto& [p, e] : merged) factors.push_back({p, e});
  return FactoredInteger{value, std::move(factors)};
}

std::vector<Integer> divisors(const FactoredInteger& n) {
  std::vector<Integer> result{1};
  for (const auto& [p, e] : n.factors()) {
    std::size_t current = result.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < current; ++i) result.push_back(result[i] * pk);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

unsigned valuation(const Integer& n, const Integer& p) {
  if (n < 1) throw std::invalid_argument("valuation: n must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("valuation: " + to_string(p) + " is not prime");
  return static_cast<unsigned>(mpz_remove(Integer{}.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace cannonball
