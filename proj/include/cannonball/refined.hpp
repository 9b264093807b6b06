#pragma once

// Per-class forbidden-residue families on m₁, where M = 12·A·m₁ + B·μ.
//
// Each family rewrites one of the eight conditions for a fixed μ as
// "m₁ ≢ residue (mod modulus)" for every admissible parameter (i, α, or a
// prime p with an exponent index i). The residue formulas are kept exactly
// as printed; in particular, the prime families fire whenever p^e divides the
// relevant quantity, regardless of whether the cofactor q is divisible by p
// (this is what rejects M = 25 through p = 5, i = 0). That "literal" reading
// can reject values the exact-valuation conditions accept, so this module
// never stands in for the strict evaluator in beeckmans.hpp.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cannonball/classifier.hpp"
#include "cannonball/conditions.hpp"

namespace cannonball {

inline constexpr std::array<int, 6> kMuValues = {0, 1, 2, 4, 9, 11};

enum class ParameterKind { index_i, index_alpha, prime_and_i, none };

std::string_view label(ParameterKind kind);

struct RuleParams {
  std::optional<Integer> p;
  std::optional<unsigned> i;
  std::optional<unsigned> alpha;

  bool operator==(const RuleParams&) const = default;
};

/// Exponent shape of the prime families: p^{2i} (i ≥ 1) or p^{2i+1} (i ≥ 0).
enum class PrimeExponent { even, odd };

/// Which quantity a prime family's modulus divides when it fires.
enum class DivisibilityTarget { m, m_plus_1 };

using ResidueFormula = mpq_class (*)(const RuleParams&);
using ModulusFormula = Integer (*)(const RuleParams&);
using PrimeFilter = bool (*)(unsigned long p_mod_24);

struct RuleDescriptor {
  std::string_view id;  ///< e.g. "mu9.C2.p19"
  int mu = 0;
  ConditionId source = ConditionId::c1_1;
  ParameterKind parameter_kind = ParameterKind::none;
  std::string_view constraints;      ///< admissible parameters, e.g. "p prime > 3, p ≡ 19 (mod 24)"
  std::string_view q_constraint;     ///< congruence on the cofactor q, e.g. "q ≡ 3 (mod 24)"
  std::string_view residue_formula;  ///< printed residue, e.g. "(p^{2i+1}-3)/8"
  std::string_view modulus_formula;  ///< e.g. "p^{2i+1}"

  ResidueFormula residue = nullptr;
  ModulusFormula modulus = nullptr;
  unsigned first_index = 0;  ///< smallest i or α

  // Prime families only.
  PrimeFilter admits_prime = nullptr;
  PrimeExponent exponent = PrimeExponent::odd;
  DivisibilityTarget target = DivisibilityTarget::m;

  /// Second printed form of the same residue ("or m₁ ≠ ..."), if any.
  ResidueFormula alternate = nullptr;
  std::string_view alternate_formula;
  /// Non-empty when the alternate does not agree with the primary form.
  std::string_view alternate_erratum;

  /// Set when the printed residue is a transcription error; `residue` then
  /// evaluates the corrected form and `printed` the form as printed.
  std::string_view erratum;
  ResidueFormula printed = nullptr;
};

/// One instantiated "m₁ ≢ residue (mod modulus)" rule.
struct ForbiddenResidue {
  Integer modulus;
  Integer residue;  ///< reduced into [0, modulus)
  const RuleDescriptor* source = nullptr;
  RuleParams params;

  bool operator==(const ForbiddenResidue& o) const {
    return modulus == o.modulus && residue == o.residue && source == o.source && params == o.params;
  }
};

/// The full printed catalog for μ ∈ {0, 1, 2, 4, 9, 11}. Throws
/// std::invalid_argument for other μ.
std::span<const RuleDescriptor> rule_catalog(int mu);

/// Looks a family up by id across all μ.
const RuleDescriptor* find_rule(std::string_view id);

/// Reduce an exact rational residue into [0, modulus) using the inverse of the
/// denominator. Throws std::domain_error if the denominator is not invertible.
Integer reduce_residue(const mpq_class& value, const Integer& modulus);

/// Evaluates one family at explicit parameters.
ForbiddenResidue instantiate(const RuleDescriptor& rule, const RuleParams& params);

/// Every family of rule_catalog(mu) at every admissible parameter whose
/// modulus does not exceed `bound`, de-duplicated by (modulus, residue) in
/// catalog order. Throws std::invalid_argument for bound < 2 or invalid μ.
std::vector<ForbiddenResidue> enumerate_forbidden(int mu, const Integer& bound);

/// Literal evaluation of M against the families of its μ-class, with every
/// matching entry reported as a witness.
///
/// Families are instantiated up to modulus M+1. exhaustive tests every
/// instantiated entry; divisor_guided only instantiates prime families at
/// primes dividing M or M+1, which is equivalent because every prime entry's
/// residue annihilates its divisibility target (checked on instantiation).
enum class Strategy { automatic, exhaustive, divisor_guided };

/// Throws std::invalid_argument when classify(M) has no μ-decomposition.
ConditionReport refined_check(const Integer& M, Strategy strategy = Strategy::automatic);

/// Shares instantiated tables across many M (sieves, comparisons).
class RefinedEvaluator {
 public:
  /// Tables cover every M ≤ max_m.
  explicit RefinedEvaluator(const Integer& max_m);

  ConditionReport check(const Integer& M) const;
  const Integer& max_m() const { return max_m_; }

 private:
  struct Entry {
    std::uint64_t modulus;
    std::uint64_t residue;
    std::size_t index;  // into forbidden_[mu]
  };
  Integer max_m_;
  std::array<std::vector<ForbiddenResidue>, 12> forbidden_;
  std::array<std::vector<Entry>, 12> entries_;  // ascending modulus
};

/// Whether refined_check applies to M (it has a μ-decomposition).
bool refined_applies(const Integer& M);

enum class FootnoteSequence { pow4_div3, five_pow4_div3, pow9_div8 };

/// n-th listed term (n ≥ 1) of
///   pow4_div3:      (2^{2n} − 1)/3         1, 5, 21, 85, 341, 1365, ...
///   five_pow4_div3: (5·2^{2(n−1)} − 2)/3   1, 6, 26, 106, 426, 1706, ...
///   pow9_div8:      (3^{2n} − 1)/8         1, 10, 91, 820, 7381, ...
/// Throws std::invalid_argument for n < 1.
Integer footnote_sequence(FootnoteSequence kind, unsigned n);

}  // namespace cannonball
