#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cannonball/classifier.hpp"
#include "cannonball/conditions.hpp"
#include "cannonball/refined.hpp"
#include "cannonball/solver.hpp"

namespace cannonball {

enum class SieveMode { strict, literal, both };

std::string_view label(SieveMode mode);
std::optional<SieveMode> parse_sieve_mode(std::string_view text);

enum class RefinedStatus { pass, violated, not_applicable };

/// "pass", "violated", "not-applicable"
std::string_view label(RefinedStatus status);
std::optional<RefinedStatus> parse_refined_status(std::string_view text);

/// One violated condition, from either evaluator.
struct ViolationNote {
  Semantics semantics = Semantics::strict;
  ConditionId condition = ConditionId::c1_1;
  std::vector<Witness> witnesses;

  bool operator==(const ViolationNote&) const = default;
};

struct SieveRow {
  Integer m_value;
  std::string class_verdict;  ///< describe(ClassVerdict)
  Status beeckmans = Status::pass;
  RefinedStatus refined = RefinedStatus::not_applicable;
  std::optional<Solution> first_solution;
  std::vector<ViolationNote> violations;  ///< strict first, then literal

  bool operator==(const SieveRow&) const = default;
};

struct SieveOptions {
  SieveMode mode = SieveMode::strict;
  bool solve = false;
  Integer a_max = 1000;
  unsigned jobs = 1;
};

/// Row for a single M, with both evaluators filled in regardless of mode.
/// `evaluator` must cover M when given.
SieveRow sieve_row(const Integer& M, bool solve, const Integer& a_max, const RefinedEvaluator* evaluator = nullptr);

/// Survivors 2 ≤ M ≤ limit (allowed class, and the evaluators selected by
/// the mode pass), ascending. Throws std::invalid_argument for limit < 2.
std::vector<SieveRow> sieve(const Integer& limit, const SieveOptions& options = {});

}  // namespace cannonball
