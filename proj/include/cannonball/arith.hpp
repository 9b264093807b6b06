#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace cannonball {

/// Arbitrary-precision signed integer used for every quantity in the library.
using Integer = mpz_class;

enum class SumMode { closed_form, direct };

/// Sum of the M consecutive squares a², (a+1)², ..., (a+M-1)².
///
/// The closed form evaluates M·(3k² + M² − 1)/12 with k = 2a + M − 1. The
/// numerator is always divisible by 12; a failed exact division throws
/// std::logic_error. SumMode::direct adds the squares one at a time and exists
/// for cross-checking.
///
/// Throws std::invalid_argument if a < 1 or M < 1.
Integer sum_squares(const Integer& a, const Integer& M, SumMode mode = SumMode::closed_form);

/// floor(√n) by monotone Newton iteration. Throws std::invalid_argument if n < 0.
Integer isqrt(const Integer& n);

/// s ≥ 0 with s² = n, or nullopt (always nullopt for n < 0).
std::optional<Integer> is_perfect_square(const Integer& n);

/// Exact quotient; throws std::logic_error if den does not divide num.
Integer exact_div(const Integer& num, const Integer& den);

Integer parse_integer(const std::string& text);
std::string to_string(const Integer& n);

}  // namespace cannonball
