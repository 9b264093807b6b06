#include "cannonball/beeckmans.hpp"

#include <stdexcept>

namespace cannonball {
namespace {

unsigned long mod_small(const Integer& n, unsigned long m) { return mpz_fdiv_ui(n.get_mpz_t(), m); }

// α = v₂(n) ≥ 2 and n/2^α ≡ 1 (mod 4)
std::optional<unsigned> two_power_pattern(const Integer& n) {
  auto alpha = static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));
  if (alpha < 2) return std::nullopt;
  Integer odd = n >> alpha;
  if (mod_small(odd, 4) != 1) return std::nullopt;
  return alpha;
}

Witness exponent_witness(const Integer& p, unsigned e) {
  Witness w;
  w.p = p;
  w.e = e;
  return w;
}

// Even exponent ≥ 2 on a fixed small prime.
Verdict even_exponent(ConditionId id, unsigned long p, unsigned e) {
  Verdict v{id, Status::pass, {}};
  if (e >= 2 && e % 2 == 0) {
    v.status = Status::violated;
    v.witnesses.push_back(exponent_witness(Integer{p}, e));
  }
  return v;
}

}  // namespace

StrictInput prepare_strict(const Integer& M) {
  if (M <= 1) throw std::invalid_argument("strict check: M must be > 1");
  return {M, factorize(M), factorize(M + 1)};
}

Verdict check_condition(const StrictInput& input, ConditionId condition) {
  const Integer& M = input.m_value;
  switch (condition) {
    case ConditionId::c1_1:
      return even_exponent(condition, 2, input.m_factors.exponent_of(2));
    case ConditionId::c1_2:
      return even_exponent(condition, 3, input.m_factors.exponent_of(3));
    case ConditionId::c1_3:
      return even_exponent(condition, 3, input.m_plus_1_factors.exponent_of(3));
    case ConditionId::c2: {
      Verdict v{condition, Status::pass, {}};
      for (const auto& [p, e] : input.m_factors.factors()) {
        if (p <= 3 || e % 2 == 0) continue;
        unsigned long r = mod_small(p, 12);
        if (r == 1 || r == 11) continue;
        v.status = Status::violated;
        v.witnesses.push_back(exponent_witness(p, e));
      }
      return v;
    }
    case ConditionId::c3: {
      Verdict v{condition, Status::pass, {}};
      for (const auto& [p, e] : input.m_plus_1_factors.factors()) {
        if (p <= 3 || mod_small(p, 4) != 3 || e % 2 == 0) continue;
        v.status = Status::violated;
        v.witnesses.push_back(exponent_witness(p, e));
      }
      return v;
    }
    case ConditionId::c4_1: {
      Verdict v{condition, Status::pass, {}};
      if (mod_small(M, 9) == 3) {
        v.status = Status::violated;
        Witness w;
        w.modulus = 9;
        w.residue = 3;
        v.witnesses.push_back(w);
      }
      return v;
    }
    case ConditionId::c4_2:
    case ConditionId::c4_3: {
      Verdict v{condition, Status::pass, {}};
      auto alpha = two_power_pattern(condition == ConditionId::c4_2 ? Integer{M + 1} : M);
      if (alpha) {
        v.status = Status::violated;
        Witness w;
        w.alpha = *alpha;
        w.modulus = Integer{1} << (*alpha + 2);
        w.residue = condition == ConditionId::c4_2 ? Integer{(Integer{1} << *alpha) - 1} : Integer{1} << *alpha;
        v.witnesses.push_back(w);
      }
      return v;
    }
  }
  throw std::logic_error("check_condition: unknown condition");
}

Verdict check_condition(const Integer& M, ConditionId condition) {
  return check_condition(prepare_strict(M), condition);
}

ConditionReport check_all(const StrictInput& input) {
  ConditionReport report = empty_report(input.m_value, Semantics::strict);
  for (ConditionId id : kAllConditions) report.verdicts[static_cast<std::size_t>(id)] = check_condition(input, id);
  finalize(report);
  return report;
}

ConditionReport check_all(const Integer& M) { return check_all(prepare_strict(M)); }

bool witness_reproduces(const Integer& M, ConditionId condition, const Witness& w) {
  auto exact_power = [](const Integer& n, const Integer& p, const Integer& e) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e.get_ui());
    return n % pe == 0 && n % (pe * p) != 0;
  };
  const Integer next = M + 1;
  switch (condition) {
    case ConditionId::c1_1:
    case ConditionId::c1_2:
    case ConditionId::c1_3: {
      if (!w.p || !w.e) return false;
      const Integer& target = condition == ConditionId::c1_3 ? next : M;
      Integer expected_p = condition == ConditionId::c1_1 ? 2 : 3;
      return *w.p == expected_p && *w.e >= 2 && (*w.e % 2) == 0 && exact_power(target, *w.p, *w.e);
    }
    case ConditionId::c2:
      if (!w.p || !w.e) return false;
      return *w.p > 3 && is_prime(*w.p) && (*w.e % 2) == 1 && (*w.p % 12) != 1 && (*w.p % 12) != 11 &&
             exact_power(M, *w.p, *w.e);
    case ConditionId::c3:
      if (!w.p || !w.e) return false;
      return *w.p > 3 && is_prime(*w.p) && (*w.p % 4) == 3 && (*w.e % 2) == 1 && exact_power(next, *w.p, *w.e);
    case ConditionId::c4_1:
      return M % 9 == 3;
    case ConditionId::c4_2:
    case ConditionId::c4_3: {
      if (!w.alpha || *w.alpha < 2) return false;
      Integer two_alpha = Integer{1} << static_cast<mp_bitcnt_t>(w.alpha->get_ui());
      Integer modulus = two_alpha * 4;
      Integer residue = condition == ConditionId::c4_2 ? Integer{two_alpha - 1} : two_alpha;
      return M % modulus == residue;
    }
  }
  return false;
}

}  // namespace cannonball
