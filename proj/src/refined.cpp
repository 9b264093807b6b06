#include "cannonball/refined.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cannonball/factor.hpp"

namespace cannonball {
namespace {

// ---- formula helpers -------------------------------------------------------

mpq_class pw(long base, long exponent) {
  Integer b = base;
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) return mpq_class{Integer{1}, r};
  return mpq_class{r};
}

mpq_class pw(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return mpq_class{r};
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

const Integer& P(const RuleParams& r) { return *r.p; }
long I(const RuleParams& r) { return static_cast<long>(*r.i); }
long Al(const RuleParams& r) { return static_cast<long>(*r.alpha); }

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Σ_{j=0}^{2i} C(2i+1, j)(p−c)^{2i−j} c^j, the cofactor of (p−c) in p^{2i+1} − c^{2i+1}.
mpq_class binomial_cofactor(const Integer& p, long c, long i) {
  mpq_class sum = 0;
  Integer d = p - c;
  for (long j = 0; j <= 2 * i; ++j)
    sum += mpq_class{binomial(static_cast<unsigned long>(2 * i + 1), static_cast<unsigned long>(j))} *
           pw(d, static_cast<unsigned long>(2 * i - j)) * pw(c, j);
  return sum;
}

// ---- moduli ----------------------------------------------------------------

Integer mod_two_2i_minus_2(const RuleParams& r) { return Integer{1} << static_cast<mp_bitcnt_t>(2 * I(r) - 2); }
Integer mod_three_2i(const RuleParams& r) { return ipow(3, static_cast<unsigned long>(2 * I(r))); }
Integer mod_p_2i(const RuleParams& r) { return ipow(P(r), static_cast<unsigned long>(2 * I(r))); }
Integer mod_p_2i_plus_1(const RuleParams& r) { return ipow(P(r), static_cast<unsigned long>(2 * I(r) + 1)); }
Integer mod_two_alpha_minus_1(const RuleParams& r) { return Integer{1} << static_cast<mp_bitcnt_t>(Al(r) - 1); }
Integer mod_two_alpha(const RuleParams& r) { return Integer{1} << static_cast<mp_bitcnt_t>(Al(r)); }
Integer mod_three(const RuleParams&) { return 3; }

// ---- prime classes (argument is p mod 24, p > 3 prime) ---------------------

bool p_pm1_mod12(unsigned long p) { return p % 12 == 1 || p % 12 == 11; }
bool p_not_pm1_mod12(unsigned long p) { return !p_pm1_mod12(p); }
bool p_3_mod4(unsigned long p) { return p % 4 == 3; }
bool p_5_mod24(unsigned long p) { return p == 5; }
bool p_7_mod24(unsigned long p) { return p == 7; }
bool p_17_mod24(unsigned long p) { return p == 17; }
bool p_19_mod24(unsigned long p) { return p == 19; }
bool p_5_mod12(unsigned long p) { return p % 12 == 5; }
bool p_7_mod12(unsigned long p) { return p % 12 == 7; }
bool p_3_mod4_1_mod6(unsigned long p) { return p % 4 == 3 && p % 6 == 1; }
bool p_3_mod4_5_mod6(unsigned long p) { return p % 4 == 3 && p % 6 == 5; }

// ---- the catalog -----------------------------------------------------------

const RuleDescriptor kMu0[] = {
    {.id = "mu0.C1.1", .mu = 0, .source = ConditionId::c1_1, .parameter_kind = ParameterKind::index_i,
     .constraints = "i > 1", .q_constraint = "q ≡ 3 (mod 6)", .residue_formula = "2^{2i-3}",
     .modulus_formula = "2^{2i-2}", .residue = [](const RuleParams& r) -> mpq_class { return pw(2, 2 * I(r) - 3); },
     .modulus = mod_two_2i_minus_2, .first_index = 2},
    {.id = "mu0.C1.2.q1", .mu = 0, .source = ConditionId::c1_2, .parameter_kind = ParameterKind::index_i,
     .constraints = "i > 0", .q_constraint = "q ≡ 1 (mod 3) ⇒ q ≡ 16 (mod 24)", .residue_formula = "2·3^{2i-1}",
     .modulus_formula = "3^{2i}", .residue = [](const RuleParams& r) -> mpq_class { return 2 * pw(3, 2 * I(r) - 1); },
     .modulus = mod_three_2i, .first_index = 1},
    {.id = "mu0.C1.2.q2", .mu = 0, .source = ConditionId::c1_2, .parameter_kind = ParameterKind::index_i,
     .constraints = "i > 0", .q_constraint = "q ≡ 2 (mod 3) ⇒ q ≡ 8 (mod 24)", .residue_formula = "3^{2i-1}",
     .modulus_formula = "3^{2i}", .residue = [](const RuleParams& r) -> mpq_class { return pw(3, 2 * I(r) - 1); },
     .modulus = mod_three_2i, .first_index = 1},
    {.id = "mu0.C2.pm1", .mu = 0, .source = ConditionId::c2, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ ±1 (mod 12), e = 2i, i > 0", .q_constraint = "q ≡ 0 (mod 24)",
     .residue_formula = "0", .modulus_formula = "p^{2i}",
     .residue = [](const RuleParams&) -> mpq_class { return mpq_class{0}; }, .modulus = mod_p_2i, .first_index = 1,
     .admits_prime = p_pm1_mod12, .exponent = PrimeExponent::even},
    {.id = "mu0.C2.other", .mu = 0, .source = ConditionId::c2, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≢ ±1 (mod 12), e = 2i+1", .q_constraint = "q ≡ 0 (mod 24)",
     .residue_formula = "0", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams&) -> mpq_class { return mpq_class{0}; }, .modulus = mod_p_2i_plus_1, .first_index = 0,
     .admits_prime = p_not_pm1_mod12, .exponent = PrimeExponent::odd},
    {.id = "mu0.C3", .mu = 0, .source = ConditionId::c3, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ 3 (mod 4), e = 2i+1", .q_constraint = "q ≡ p (mod 24)",
     .residue_formula = "(p^{2i+2}-1)/24", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams& r) -> mpq_class { return (pw(P(r), 2 * I(r) + 2) - 1) / 24; },
     .modulus = mod_p_2i_plus_1, .first_index = 0, .admits_prime = p_3_mod4, .exponent = PrimeExponent::odd,
     .target = DivisibilityTarget::m_plus_1},
    {.id = "mu0.C4.1", .mu = 0, .source = ConditionId::c4_1, .parameter_kind = ParameterKind::none,
     .constraints = "", .q_constraint = "q ≡ 5 (mod 8)", .residue_formula = "2", .modulus_formula = "3",
     .residue = [](const RuleParams&) -> mpq_class { return mpq_class{2}; }, .modulus = mod_three},
    {.id = "mu0.C4.3", .mu = 0, .source = ConditionId::c4_3, .parameter_kind = ParameterKind::index_alpha,
     .constraints = "α ≥ 3", .q_constraint = "q ≡ 2 (mod 3)", .residue_formula = "3·2^{α-3}",
     .modulus_formula = "2^{α-1}", .residue = [](const RuleParams& r) -> mpq_class { return 3 * pw(2, Al(r) - 3); },
     .modulus = mod_two_alpha_minus_1, .first_index = 3},
};

const RuleDescriptor kMu1[] = {
    {.id = "mu1.C2.pm1", .mu = 1, .source = ConditionId::c2, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ ±1 (mod 12), e = 2i, i > 0", .q_constraint = "q ≡ 1 (mod 24)",
     .residue_formula = "(p^{2i}-1)/24", .modulus_formula = "p^{2i}",
     .residue = [](const RuleParams& r) -> mpq_class { return (pw(P(r), 2 * I(r)) - 1) / 24; }, .modulus = mod_p_2i,
     .first_index = 1, .admits_prime = p_pm1_mod12, .exponent = PrimeExponent::even},
    {.id = "mu1.C2.other", .mu = 1, .source = ConditionId::c2, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≢ ±1 (mod 12), e = 2i+1", .q_constraint = "q ≡ p (mod 24)",
     .residue_formula = "(p^{2i+2}-1)/24", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams& r) -> mpq_class { return (pw(P(r), 2 * I(r) + 2) - 1) / 24; },
     .modulus = mod_p_2i_plus_1, .first_index = 0, .admits_prime = p_not_pm1_mod12,
     .exponent = PrimeExponent::odd},
    {.id = "mu1.C3", .mu = 1, .source = ConditionId::c3, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ 3 (mod 4), e = 2i+1", .q_constraint = "q ≡ 2p (mod 24)",
     .residue_formula = "(p^{2i+2}-1)/12", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams& r) -> mpq_class { return (pw(P(r), 2 * I(r) + 2) - 1) / 12; },
     .modulus = mod_p_2i_plus_1, .first_index = 0, .admits_prime = p_3_mod4, .exponent = PrimeExponent::odd,
     .target = DivisibilityTarget::m_plus_1},
};

const RuleDescriptor kMu2[] = {
    {.id = "mu2.C1.3.q1", .mu = 2, .source = ConditionId::c1_3, .parameter_kind = ParameterKind::index_i,
     .constraints = "i > 0", .q_constraint = "q ≡ 1 (mod 3) ⇒ q ≡ 19 (mod 24)",
     .residue_formula = "(19·3^{2i-1}-1)/8", .modulus_formula = "3^{2i}",
     .residue = [](const RuleParams& r) -> mpq_class { return (19 * pw(3, 2 * I(r) - 1) - 1) / 8; }, .modulus = mod_three_2i,
     .first_index = 1},
    {.id = "mu2.C1.3.q2", .mu = 2, .source = ConditionId::c1_3, .parameter_kind = ParameterKind::index_i,
     .constraints = "i > 0", .q_constraint = "q ≡ 2 (mod 3) ⇒ q ≡ 11 (mod 24)",
     .residue_formula = "(11·3^{2i-1}-1)/8", .modulus_formula = "3^{2i}",
     .residue = [](const RuleParams& r) -> mpq_class { return (11 * pw(3, 2 * I(r) - 1) - 1) / 8; }, .modulus = mod_three_2i,
     .first_index = 1},
    {.id = "mu2.C2.pm1", .mu = 2, .source = ConditionId::c2, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ ±1 (mod 12), e = 2i, i > 0", .q_constraint = "q ≡ 2 (mod 24)",
     .residue_formula = "(p^{2i}-1)/12", .modulus_formula = "p^{2i}",
     .residue = [](const RuleParams& r) -> mpq_class { return (pw(P(r), 2 * I(r)) - 1) / 12; }, .modulus = mod_p_2i,
     .first_index = 1, .admits_prime = p_pm1_mod12, .exponent = PrimeExponent::even},
    {.id = "mu2.C2.other", .mu = 2, .source = ConditionId::c2, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≢ ±1 (mod 12), e = 2i+1", .q_constraint = "q ≡ 2p (mod 24)",
     .residue_formula = "(p^{2i+2}-1)/12", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams& r) -> mpq_class { return (pw(P(r), 2 * I(r) + 2) - 1) / 12; },
     .modulus = mod_p_2i_plus_1, .first_index = 0, .admits_prime = p_not_pm1_mod12,
     .exponent = PrimeExponent::odd},
    {.id = "mu2.C3", .mu = 2, .source = ConditionId::c3, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ 3 (mod 4), e = 2i+1", .q_constraint = "q ≡ 3p (mod 24)",
     .residue_formula = "(p^{2i+2}-1)/8", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams& r) -> mpq_class { return (pw(P(r), 2 * I(r) + 2) - 1) / 8; },
     .modulus = mod_p_2i_plus_1, .first_index = 0, .admits_prime = p_3_mod4, .exponent = PrimeExponent::odd,
     .target = DivisibilityTarget::m_plus_1},
};

// 2·Σ_{j=3}^{top} 2^{2(j−3)}
mpq_class doubled_power4_sum(long top) {
  mpq_class sum = 0;
  for (long j = 3; j <= top; ++j) sum += pw(2, 2 * (j - 3));
  return 2 * sum;
}

const RuleDescriptor kMu4[] = {
    {.id = "mu4.C1.1", .mu = 4, .source = ConditionId::c1_1, .parameter_kind = ParameterKind::index_i,
     .constraints = "i > 1", .q_constraint = "q ≡ 1 (mod 6)", .residue_formula = "2(2^{2i-4}-1)/3",
     .modulus_formula = "2^{2i-2}", .residue = [](const RuleParams& r) -> mpq_class { return 2 * (pw(2, 2 * I(r) - 4) - 1) / 3; },
     .modulus = mod_two_2i_minus_2, .first_index = 2,
     .alternate = [](const RuleParams& r) -> mpq_class { return doubled_power4_sum(I(r)); },
     .alternate_formula = "2·Σ_{j=3}^{i} 2^{2(j-3)}"},
    {.id = "mu4.C2.pm1", .mu = 4, .source = ConditionId::c2, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ ±1 (mod 12), e = 2i, i > 0", .q_constraint = "q ≡ 32 (mod 48)",
     .residue_formula = "2(p^{2i}-1)/3", .modulus_formula = "p^{2i}",
     .residue = [](const RuleParams& r) -> mpq_class { return 2 * (pw(P(r), 2 * I(r)) - 1) / 3; }, .modulus = mod_p_2i,
     .first_index = 1, .admits_prime = p_pm1_mod12, .exponent = PrimeExponent::even},
    {.id = "mu4.C2.other", .mu = 4, .source = ConditionId::c2, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≢ ±1 (mod 12), e = 2i+1", .q_constraint = "q ≡ 16 (mod 48)",
     .residue_formula = "2(p^{2i+1}-1)/3", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams& r) -> mpq_class { return 2 * (pw(P(r), 2 * I(r) + 1) - 1) / 3; },
     .modulus = mod_p_2i_plus_1, .first_index = 0, .admits_prime = p_not_pm1_mod12,
     .exponent = PrimeExponent::odd},
    {.id = "mu4.C3", .mu = 4, .source = ConditionId::c3, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ 3 (mod 4), e = 2i+1", .q_constraint = "q ≡ 17p (mod 24)",
     .residue_formula = "17(p^{2i+2}-1)/24", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams& r) -> mpq_class { return 17 * (pw(P(r), 2 * I(r) + 2) - 1) / 24; },
     .modulus = mod_p_2i_plus_1, .first_index = 0, .admits_prime = p_3_mod4, .exponent = PrimeExponent::odd,
     .target = DivisibilityTarget::m_plus_1},
    {.id = "mu4.C4.3.even", .mu = 4, .source = ConditionId::c4_3, .parameter_kind = ParameterKind::index_alpha,
     .constraints = "α ≥ 3, α ≡ 0 (mod 2)", .q_constraint = "q ≡ 0 (mod 3)", .residue_formula = "2(2^{α-4}-1)/3",
     .modulus_formula = "2^{α-1}", .residue = [](const RuleParams& r) -> mpq_class { return 2 * (pw(2, Al(r) - 4) - 1) / 3; },
     .modulus = mod_two_alpha_minus_1, .first_index = 4,
     .alternate = [](const RuleParams& r) -> mpq_class { return doubled_power4_sum(Al(r) / 2); },
     .alternate_formula = "2·Σ_{j=3}^{α/2} 2^{2(j-3)}"},
    {.id = "mu4.C4.3.odd", .mu = 4, .source = ConditionId::c4_3, .parameter_kind = ParameterKind::index_alpha,
     .constraints = "α ≥ 3, α ≡ 1 (mod 2)", .q_constraint = "q ≡ 1 (mod 3)",
     .residue_formula = "2(5·2^{α-4}-1)/3", .modulus_formula = "2^{α-1}",
     .residue = [](const RuleParams& r) -> mpq_class { return 2 * (5 * pw(2, Al(r) - 4) - 1) / 3; },
     .modulus = mod_two_alpha_minus_1, .first_index = 3,
     .alternate =
         [](const RuleParams& r) -> mpq_class {
           mpq_class sum = pw(2, Al(r) - 3);
           for (long j = 2; j <= (Al(r) - 1) / 2; ++j) sum += pw(2, 2 * j - 3);
           return sum;
         },
     .alternate_formula = "2^{α-3} + Σ_{j=2}^{(α-1)/2} 2^{2j-3}"},
};

const RuleDescriptor kMu9[] = {
    {.id = "mu9.C1.2.q1", .mu = 9, .source = ConditionId::c1_2, .parameter_kind = ParameterKind::index_i,
     .constraints = "i > 0", .q_constraint = "q ≡ 1 (mod 3) ⇒ q ≡ 1 (mod 24)", .residue_formula = "3(3^{2i-2}-1)/8",
     .modulus_formula = "3^{2i}", .residue = [](const RuleParams& r) -> mpq_class { return 3 * (pw(3, 2 * I(r) - 2) - 1) / 8; },
     .modulus = mod_three_2i, .first_index = 1,
     .alternate =
         [](const RuleParams& r) -> mpq_class {
           mpq_class sum = 0;
           for (long j = 0; j <= I(r) - 2; ++j) sum += pw(3, 2 * j);
           return sum;
         },
     .alternate_formula = "Σ_{j=0}^{i-2} 3^{2j}",
     .alternate_erratum = "printed sum is one third of the closed form; the closed form follows from M = 3^{2i}q"},
    {.id = "mu9.C1.2.q2", .mu = 9, .source = ConditionId::c1_2, .parameter_kind = ParameterKind::index_i,
     .constraints = "i > 0", .q_constraint = "q ≡ 2 (mod 3) ⇒ q ≡ 17 (mod 24)",
     .residue_formula = "2·3^{2i-1} + 3(3^{2i-2}-1)/8", .modulus_formula = "3^{2i}",
     .residue = [](const RuleParams& r) -> mpq_class { return 2 * pw(3, 2 * I(r) - 1) + 3 * (pw(3, 2 * I(r) - 2) - 1) / 8; },
     .modulus = mod_three_2i, .first_index = 1},
    {.id = "mu9.C2.pm1", .mu = 9, .source = ConditionId::c2, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ ±1 (mod 12), e = 2i, i > 0", .q_constraint = "q ≡ 9 (mod 24)",
     .residue_formula = "3(p^{2i}-1)/8", .modulus_formula = "p^{2i}",
     .residue = [](const RuleParams& r) -> mpq_class { return 3 * (pw(P(r), 2 * I(r)) - 1) / 8; }, .modulus = mod_p_2i,
     .first_index = 1, .admits_prime = p_pm1_mod12, .exponent = PrimeExponent::even},
    {.id = "mu9.C2.p5", .mu = 9, .source = ConditionId::c2, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ 5 (mod 24), e = 2i+1", .q_constraint = "q ≡ 21 (mod 24)",
     .residue_formula = "(7p^{2i+1}-3)/8", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams& r) -> mpq_class { return (7 * pw(P(r), 2 * I(r) + 1) - 3) / 8; },
     .modulus = mod_p_2i_plus_1, .first_index = 0, .admits_prime = p_5_mod24, .exponent = PrimeExponent::odd},
    {.id = "mu9.C2.p7", .mu = 9, .source = ConditionId::c2, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ 7 (mod 24), e = 2i+1", .q_constraint = "q ≡ 15 (mod 24)",
     .residue_formula = "(5p^{2i+1}-3)/8", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams& r) -> mpq_class { return (5 * pw(P(r), 2 * I(r) + 1) - 3) / 8; },
     .modulus = mod_p_2i_plus_1, .first_index = 0, .admits_prime = p_7_mod24, .exponent = PrimeExponent::odd},
    {.id = "mu9.C2.p17", .mu = 9, .source = ConditionId::c2, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ 17 (mod 24), e = 2i+1", .q_constraint = "q ≡ 9 (mod 24)",
     .residue_formula = "3(p^{2i+1}-1)/8", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams& r) -> mpq_class { return 3 * (pw(P(r), 2 * I(r) + 1) - 1) / 8; },
     .modulus = mod_p_2i_plus_1, .first_index = 0, .admits_prime = p_17_mod24, .exponent = PrimeExponent::odd},
    {.id = "mu9.C2.p19", .mu = 9, .source = ConditionId::c2, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ 19 (mod 24), e = 2i+1", .q_constraint = "q ≡ 3 (mod 24)",
     .residue_formula = "(p^{2i+1}-3)/8", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams& r) -> mpq_class { return (pw(P(r), 2 * I(r) + 1) - 3) / 8; },
     .modulus = mod_p_2i_plus_1, .first_index = 0, .admits_prime = p_19_mod24, .exponent = PrimeExponent::odd},
    {.id = "mu9.C3.p1mod6", .mu = 9, .source = ConditionId::c3, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ 3 (mod 4), p ≡ 1 (mod 6), e = 2i+1", .q_constraint = "q ≡ 22 (mod 24)",
     .residue_formula = "(11p^{2i+1}-5)/12", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams& r) -> mpq_class { return (11 * pw(P(r), 2 * I(r) + 1) - 5) / 12; },
     .modulus = mod_p_2i_plus_1, .first_index = 0, .admits_prime = p_3_mod4_1_mod6,
     .exponent = PrimeExponent::odd, .target = DivisibilityTarget::m_plus_1,
     .erratum = "printed as 11(p^{2i+1}-5)/12, which is not an integer (p=7: 22/12) and is not ≡ -5/12",
     .printed = [](const RuleParams& r) -> mpq_class { return 11 * (pw(P(r), 2 * I(r) + 1) - 5) / 12; }},
    {.id = "mu9.C3.p5mod6", .mu = 9, .source = ConditionId::c3, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ 3 (mod 4), p ≡ 5 (mod 6), e = 2i+1", .q_constraint = "q ≡ 14 (mod 24)",
     .residue_formula = "(7p^{2i+1}-5)/12", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams& r) -> mpq_class { return (7 * pw(P(r), 2 * I(r) + 1) - 5) / 12; },
     .modulus = mod_p_2i_plus_1, .first_index = 0, .admits_prime = p_3_mod4_5_mod6,
     .exponent = PrimeExponent::odd, .target = DivisibilityTarget::m_plus_1},
    {.id = "mu9.C4.1", .mu = 9, .source = ConditionId::c4_1, .parameter_kind = ParameterKind::none,
     .constraints = "", .q_constraint = "q ≡ 6 (mod 8)", .residue_formula = "2", .modulus_formula = "3",
     .residue = [](const RuleParams&) -> mpq_class { return mpq_class{2}; }, .modulus = mod_three},
};

const RuleDescriptor kMu11[] = {
    {.id = "mu11.C1.3.q1", .mu = 11, .source = ConditionId::c1_3, .parameter_kind = ParameterKind::index_i,
     .constraints = "i > 0", .q_constraint = "q ≡ 1 (mod 3) ⇒ q ≡ 4 (mod 12)", .residue_formula = "3^{2i-1}-1",
     .modulus_formula = "3^{2i}", .residue = [](const RuleParams& r) -> mpq_class { return pw(3, 2 * I(r) - 1) - 1; },
     .modulus = mod_three_2i, .first_index = 1},
    {.id = "mu11.C1.3.q2", .mu = 11, .source = ConditionId::c1_3, .parameter_kind = ParameterKind::index_i,
     .constraints = "i > 0", .q_constraint = "q ≡ 2 (mod 3) ⇒ q ≡ 8 (mod 12)", .residue_formula = "2·3^{2i-1}-1",
     .modulus_formula = "3^{2i}", .residue = [](const RuleParams& r) -> mpq_class { return 2 * pw(3, 2 * I(r) - 1) - 1; },
     .modulus = mod_three_2i, .first_index = 1},
    {.id = "mu11.C2.pm1", .mu = 11, .source = ConditionId::c2, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ ±1 (mod 12), e = 2i, i > 0", .q_constraint = "q ≡ 11 (mod 12)",
     .residue_formula = "11(p^{2i}-1)/12", .modulus_formula = "p^{2i}",
     .residue = [](const RuleParams& r) -> mpq_class { return 11 * (pw(P(r), 2 * I(r)) - 1) / 12; }, .modulus = mod_p_2i,
     .first_index = 1, .admits_prime = p_pm1_mod12, .exponent = PrimeExponent::even},
    {.id = "mu11.C2.p5", .mu = 11, .source = ConditionId::c2, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ 5 (mod 12), e = 2i+1", .q_constraint = "q ≡ 7 (mod 12)",
     .residue_formula = "(7p^{2i+1}-11)/12", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams& r) -> mpq_class { return (7 * pw(P(r), 2 * I(r) + 1) - 11) / 12; },
     .modulus = mod_p_2i_plus_1, .first_index = 0, .admits_prime = p_5_mod12, .exponent = PrimeExponent::odd,
     .alternate =
         [](const RuleParams& r) -> mpq_class {
           return mpq_class{7 * (P(r) - 5)} / 12 * binomial_cofactor(P(r), 5, I(r)) +
                  (7 * pw(5, 2 * I(r) + 1) - 11) / 12;
         },
     .alternate_formula = "(7(p-5)/12)·Σ_{j=0}^{2i} C(2i+1,j)(p-5)^{2i-j}5^j + (7·5^{2i+1}-11)/12"},
    {.id = "mu11.C2.p7", .mu = 11, .source = ConditionId::c2, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ 7 (mod 12), e = 2i+1", .q_constraint = "q ≡ 5 (mod 12)",
     .residue_formula = "(5p^{2i+1}-11)/12", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams& r) -> mpq_class { return (5 * pw(P(r), 2 * I(r) + 1) - 11) / 12; },
     .modulus = mod_p_2i_plus_1, .first_index = 0, .admits_prime = p_7_mod12, .exponent = PrimeExponent::odd,
     .alternate =
         [](const RuleParams& r) -> mpq_class {
           return mpq_class{5 * (P(r) - 7)} / 12 * binomial_cofactor(P(r), 7, I(r)) +
                  (5 * pw(7, 2 * I(r) + 1) - 11) / 12;
         },
     .alternate_formula = "(5(p-7)/12)·Σ_{j=0}^{2i} C(2i+1,j)(p-7)^{2i-j}7^j + (5·7^{2i+1}-11)/12"},
    {.id = "mu11.C3", .mu = 11, .source = ConditionId::c3, .parameter_kind = ParameterKind::prime_and_i,
     .constraints = "p prime > 3, p ≡ 3 (mod 4), e = 2i+1", .q_constraint = "q ≡ 0 (mod 12)",
     .residue_formula = "-1", .modulus_formula = "p^{2i+1}",
     .residue = [](const RuleParams&) -> mpq_class { return mpq_class{-1}; }, .modulus = mod_p_2i_plus_1, .first_index = 0,
     .admits_prime = p_3_mod4, .exponent = PrimeExponent::odd, .target = DivisibilityTarget::m_plus_1},
    {.id = "mu11.C4.2", .mu = 11, .source = ConditionId::c4_2, .parameter_kind = ParameterKind::index_alpha,
     .constraints = "α ≥ 2", .q_constraint = "q ≡ 2 (mod 3)", .residue_formula = "3·2^{α-2}-1",
     .modulus_formula = "2^α", .residue = [](const RuleParams& r) -> mpq_class { return 3 * pw(2, Al(r) - 2) - 1; },
     .modulus = mod_two_alpha, .first_index = 2},
};

// M = step·m₁ + offset within each μ-class.
struct ClassShape {
  long step;
  long offset;
};

ClassShape shape_of(int mu) {
  switch (mu) {
    case 0: return {24, 0};
    case 1: return {24, 1};
    case 2: return {24, 2};
    case 4: return {24, 16};
    case 9: return {24, 9};
    case 11: return {12, 11};
    default: break;
  }
  throw std::invalid_argument("no refined catalog for mu = " + std::to_string(mu));
}

std::span<const RuleDescriptor> catalog_or_throw(int mu) {
  switch (mu) {
    case 0: return kMu0;
    case 1: return kMu1;
    case 2: return kMu2;
    case 4: return kMu4;
    case 9: return kMu9;
    case 11: return kMu11;
    default: break;
  }
  throw std::invalid_argument("no refined catalog for mu = " + std::to_string(mu));
}

bool admits_index(const RuleDescriptor& rule, unsigned index) {
  if (rule.id == "mu4.C4.3.even") return index % 2 == 0;
  if (rule.id == "mu4.C4.3.odd") return index % 2 == 1;
  return true;
}

RuleParams index_params(const RuleDescriptor& rule, unsigned index) {
  RuleParams params;
  if (rule.parameter_kind == ParameterKind::index_i) params.i = index;
  if (rule.parameter_kind == ParameterKind::index_alpha) params.alpha = index;
  return params;
}

// Every prime entry's residue r must satisfy step·r + offset (+1 for M+1)
// ≡ 0 (mod p^e), i.e. it fires exactly when p^e divides its target.
void check_annihilates(const RuleDescriptor& rule, const ForbiddenResidue& entry) {
  ClassShape shape = shape_of(rule.mu);
  Integer target = shape.step * entry.residue + shape.offset;
  if (rule.target == DivisibilityTarget::m_plus_1) target += 1;
  if (target % entry.modulus != 0)
    throw std::logic_error("refined family " + std::string(rule.id) + " does not annihilate its target at p=" +
                           to_string(*entry.params.p));
}

template <typename Emit>
void for_each_index_entry(const RuleDescriptor& rule, const Integer& bound, Emit&& emit) {
  if (rule.parameter_kind == ParameterKind::none) {
    if (rule.modulus(RuleParams{}) <= bound) emit(instantiate(rule, RuleParams{}));
    return;
  }
  for (unsigned index = rule.first_index;; ++index) {
    if (!admits_index(rule, index)) continue;
    RuleParams params = index_params(rule, index);
    if (rule.modulus(params) > bound) break;
    emit(instantiate(rule, params));
  }
}

template <typename Emit>
void for_each_prime_entry(const RuleDescriptor& rule, const Integer& p, const Integer& bound, Emit&& emit) {
  if (p <= 3 || !rule.admits_prime(mpz_fdiv_ui(p.get_mpz_t(), 24))) return;
  for (unsigned i = rule.first_index;; ++i) {
    RuleParams params{p, i, std::nullopt};
    if (rule.modulus(params) > bound) break;
    ForbiddenResidue entry = instantiate(rule, params);
    check_annihilates(rule, entry);
    emit(std::move(entry));
  }
}

class Deduplicator {
 public:
  bool first(const ForbiddenResidue& entry) { return seen_.emplace(entry.modulus, entry.residue).second; }

 private:
  std::set<std::pair<Integer, Integer>> seen_;
};

std::uint64_t bound_as_u64(const Integer& bound) {
  if (!bound.fits_ulong_p()) throw std::invalid_argument("refined: bound too large for prime enumeration");
  return bound.get_ui();
}

void add_hit(ConditionReport& report, const ForbiddenResidue& entry) {
  Witness w;
  w.family = std::string(entry.source->id);
  w.p = entry.params.p;
  if (entry.params.i) w.i = *entry.params.i;
  if (entry.params.alpha) w.alpha = *entry.params.alpha;
  if (entry.params.p && entry.params.i)
    w.e = entry.source->exponent == PrimeExponent::even ? 2 * *entry.params.i : 2 * *entry.params.i + 1;
  w.modulus = entry.modulus;
  w.residue = entry.residue;
  auto& verdict = report.verdicts[static_cast<std::size_t>(entry.source->source)];
  verdict.status = Status::violated;
  verdict.witnesses.push_back(std::move(w));
}

const MuDecomposition& decomposition_or_throw(const ClassDecomposition& cls) {
  if (!cls.decomposition)
    throw std::invalid_argument("refined_check: M = " + to_string(cls.m_value) + " has no mu-decomposition");
  return *cls.decomposition;
}

constexpr unsigned long kExhaustiveLimit = 2'000'000;

}  // namespace

std::string_view label(ParameterKind kind) {
  switch (kind) {
    case ParameterKind::index_i: return "index_i";
    case ParameterKind::index_alpha: return "index_alpha";
    case ParameterKind::prime_and_i: return "prime_and_i";
    case ParameterKind::none: return "none";
  }
  return "?";
}

std::span<const RuleDescriptor> rule_catalog(int mu) { return catalog_or_throw(mu); }

const RuleDescriptor* find_rule(std::string_view id) {
  for (int mu : kMuValues)
    for (const auto& rule : catalog_or_throw(mu))
      if (rule.id == id) return &rule;
  return nullptr;
}

Integer reduce_residue(const mpq_class& value, const Integer& modulus) {
  Integer inverse;
  if (mpz_invert(inverse.get_mpz_t(), value.get_den_mpz_t(), modulus.get_mpz_t()) == 0)
    throw std::domain_error("reduce_residue: denominator not invertible mod " + to_string(modulus));
  Integer num = value.get_num();
  Integer r = (num * inverse) % modulus;
  if (r < 0) r += modulus;
  return r;
}

ForbiddenResidue instantiate(const RuleDescriptor& rule, const RuleParams& params) {
  ForbiddenResidue entry;
  entry.modulus = rule.modulus(params);
  entry.residue = reduce_residue(rule.residue(params), entry.modulus);
  entry.source = &rule;
  entry.params = params;
  return entry;
}

std::vector<ForbiddenResidue> enumerate_forbidden(int mu, const Integer& bound) {
  if (bound < 2) throw std::invalid_argument("enumerate_forbidden: bound must be >= 2");
  auto catalog = catalog_or_throw(mu);
  std::vector<ForbiddenResidue> out;
  Deduplicator dedup;
  auto emit = [&](ForbiddenResidue entry) {
    if (dedup.first(entry)) out.push_back(std::move(entry));
  };

  std::vector<std::uint64_t> primes;
  for (const auto& rule : catalog) {
    if (rule.parameter_kind != ParameterKind::prime_and_i) {
      for_each_index_entry(rule, bound, emit);
      continue;
    }
    if (primes.empty()) primes = primes_up_to(bound_as_u64(bound));
    for (std::uint64_t p : primes) for_each_prime_entry(rule, Integer{static_cast<unsigned long>(p)}, bound, emit);
  }
  return out;
}

bool refined_applies(const Integer& M) { return M > 1 && classify(M).decomposition.has_value(); }

ConditionReport refined_check(const Integer& M, Strategy strategy) {
  const ClassDecomposition cls = classify(M);
  const MuDecomposition& dec = decomposition_or_throw(cls);
  const Integer bound = M + 1;
  if (strategy == Strategy::automatic)
    strategy = bound <= kExhaustiveLimit ? Strategy::exhaustive : Strategy::divisor_guided;

  ConditionReport report = empty_report(M, Semantics::literal);
  auto test = [&](const ForbiddenResidue& entry) {
    if (dec.m1 % entry.modulus == entry.residue) add_hit(report, entry);
  };

  if (strategy == Strategy::exhaustive) {
    for (const auto& entry : enumerate_forbidden(dec.mu, bound)) test(entry);
  } else {
    const FactoredInteger targets[] = {factorize(M), factorize(M + 1)};
    Deduplicator dedup;
    auto emit = [&](const ForbiddenResidue& entry) {
      if (dedup.first(entry)) test(entry);
    };
    for (const auto& rule : catalog_or_throw(dec.mu)) {
      if (rule.parameter_kind != ParameterKind::prime_and_i) {
        for_each_index_entry(rule, bound, emit);
        continue;
      }
      const auto& target = targets[rule.target == DivisibilityTarget::m ? 0 : 1];
      for (const auto& [p, e] : target.factors()) for_each_prime_entry(rule, p, bound, emit);
    }
  }
  finalize(report);
  return report;
}

RefinedEvaluator::RefinedEvaluator(const Integer& max_m) : max_m_(max_m) {
  if (max_m < 2) throw std::invalid_argument("RefinedEvaluator: max_m must be >= 2");
  for (int mu : kMuValues) {
    auto& forbidden = forbidden_[static_cast<std::size_t>(mu)];
    forbidden = enumerate_forbidden(mu, max_m + 1);
    auto& entries = entries_[static_cast<std::size_t>(mu)];
    entries.reserve(forbidden.size());
    for (std::size_t k = 0; k < forbidden.size(); ++k)
      entries.push_back({forbidden[k].modulus.get_ui(), forbidden[k].residue.get_ui(), k});
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.modulus < b.modulus; });
  }
}

ConditionReport RefinedEvaluator::check(const Integer& M) const {
  if (M > max_m_) throw std::invalid_argument("RefinedEvaluator: M exceeds the precomputed range");
  const ClassDecomposition cls = classify(M);
  const MuDecomposition& dec = decomposition_or_throw(cls);
  const std::uint64_t bound = Integer{M + 1}.get_ui();

  // Hits are collected per source in catalog order, matching refined_check.
  const auto& forbidden = forbidden_[static_cast<std::size_t>(dec.mu)];
  std::vector<std::size_t> hits;
  for (const Entry& entry : entries_[static_cast<std::size_t>(dec.mu)]) {
    if (entry.modulus > bound) break;
    if (mpz_fdiv_ui(dec.m1.get_mpz_t(), entry.modulus) == entry.residue) hits.push_back(entry.index);
  }
  std::sort(hits.begin(), hits.end());

  ConditionReport report = empty_report(M, Semantics::literal);
  for (std::size_t k : hits) add_hit(report, forbidden[k]);
  finalize(report);
  return report;
}

Integer footnote_sequence(FootnoteSequence kind, unsigned n) {
  if (n < 1) throw std::invalid_argument("footnote_sequence: n must be >= 1");
  switch (kind) {
    case FootnoteSequence::pow4_div3:
      return exact_div((Integer{1} << (2 * n)) - 1, 3);
    case FootnoteSequence::five_pow4_div3:
      return exact_div(5 * (Integer{1} << (2 * (n - 1))) - 2, 3);
    case FootnoteSequence::pow9_div8:
      return exact_div(ipow(3, 2UL * n) - 1, 8);
  }
  throw std::invalid_argument("footnote_sequence: unknown sequence");
}

}  // namespace cannonball
