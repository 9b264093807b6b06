#pragma once

// Report types shared by the strict and the literal (refined) evaluators.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cannonball/arith.hpp"
#include "cannonball/factor.hpp"

namespace cannonball {

enum class ConditionId { c1_1, c1_2, c1_3, c2, c3, c4_1, c4_2, c4_3 };

inline constexpr std::array<ConditionId, 8> kAllConditions = {
    ConditionId::c1_1, ConditionId::c1_2, ConditionId::c1_3, ConditionId::c2,
    ConditionId::c3,   ConditionId::c4_1, ConditionId::c4_2, ConditionId::c4_3,
};

/// "C1.1", "C2", ...
std::string_view label(ConditionId id);
std::optional<ConditionId> parse_condition(std::string_view text);

enum class Status { pass, violated };

std::string_view label(Status status);
std::optional<Status> parse_status(std::string_view text);

enum class Semantics { strict, literal };

std::string_view label(Semantics semantics);
std::optional<Semantics> parse_semantics(std::string_view text);

/// Parameters that triggered a violation. Strict verdicts fill p/e/alpha;
/// literal verdicts fill p/i/alpha together with the forbidden residue.
struct Witness {
  std::optional<Integer> p;
  std::optional<Integer> e;
  std::optional<Integer> i;
  std::optional<Integer> alpha;
  std::optional<Integer> modulus;
  std::optional<Integer> residue;
  std::string family;  ///< refined rule family id, empty for strict witnesses

  bool operator==(const Witness&) const = default;
};

/// e.g. "p=5,e=1" or "p=5,i=0,1 mod 5"
std::string describe(const Witness& w);

struct Verdict {
  ConditionId condition = ConditionId::c1_1;
  Status status = Status::pass;
  std::vector<Witness> witnesses;  ///< non-empty iff violated

  bool operator==(const Verdict&) const = default;
};

struct ConditionReport {
  Integer m_value;
  Semantics semantics = Semantics::strict;
  std::array<Verdict, 8> verdicts;
  Status overall = Status::pass;

  const Verdict& operator[](ConditionId id) const { return verdicts[static_cast<std::size_t>(id)]; }
  bool passed() const { return overall == Status::pass; }
  std::vector<ConditionId> violated() const;

  bool operator==(const ConditionReport&) const = default;
};

/// Fresh report with all eight verdicts passing.
ConditionReport empty_report(const Integer& M, Semantics semantics);

/// Recompute `overall` from the verdicts.
void finalize(ConditionReport& report);

}  // namespace cannonball
