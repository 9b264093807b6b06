#pragma once

#include "cannonball/conditions.hpp"
#include "cannonball/factor.hpp"

namespace cannonball {

// The eight necessary conditions on M under exact-valuation semantics:
// e is always the exact exponent v_p(M) (or v_p(M+1) for C1.3 and C3).
//
//   C1.1  violated iff v₂(M) ≥ 2 is even
//   C1.2  violated iff v₃(M) ≥ 2 is even
//   C1.3  violated iff v₃(M+1) ≥ 2 is even
//   C2    violated iff some prime p > 3 has v_p(M) odd and p ≢ ±1 (mod 12)
//   C3    violated iff some prime p > 3, p ≡ 3 (mod 4), has v_p(M+1) odd
//   C4.1  violated iff M ≡ 3 (mod 9)
//   C4.2  violated iff α = v₂(M+1) ≥ 2 and (M+1)/2^α ≡ 1 (mod 4)
//   C4.3  violated iff α = v₂(M) ≥ 2 and M/2^α ≡ 1 (mod 4)
//
// The C4.2/C4.3 forms are equivalent to "M ≢ 2^α − 1 (mod 2^{α+2})" and
// "M ≢ 2^α (mod 2^{α+2})" for every α ≥ 2.
//
// These are necessary conditions only; M = 25 and M = 842 pass all eight
// and no solution is known for either.
struct StrictInput {
  Integer m_value;
  FactoredInteger m_factors;
  FactoredInteger m_plus_1_factors;
};

/// Factorizes M and M+1. Throws std::invalid_argument for M ≤ 1.
StrictInput prepare_strict(const Integer& M);

Verdict check_condition(const StrictInput& input, ConditionId condition);
Verdict check_condition(const Integer& M, ConditionId condition);

ConditionReport check_all(const StrictInput& input);
ConditionReport check_all(const Integer& M);

/// Re-derives a strict witness against M: true iff the witness parameters
/// reproduce a violation of `condition`.
bool witness_reproduces(const Integer& M, ConditionId condition, const Witness& witness);

}  // namespace cannonball
