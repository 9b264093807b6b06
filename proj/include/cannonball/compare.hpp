#pragma once

// Disagreements between the strict conditions and the literal per-class
// families over a range of allowed M.

#include <optional>
#include <vector>

#include "cannonball/conditions.hpp"
#include "cannonball/solver.hpp"

namespace cannonball {

struct DifferenceEntry {
  Integer m_value;
  ConditionReport strict;
  ConditionReport literal;
  Integer a_max;                    ///< bound of the solution search
  std::optional<Solution> solution;  ///< smallest-a solution found, if any

  bool operator==(const DifferenceEntry&) const = default;
};

struct DifferenceReport {
  Integer m_max;
  Integer a_max;
  std::vector<DifferenceEntry> strict_only;   ///< strict violated, literal passed
  std::vector<DifferenceEntry> literal_only;  ///< literal violated, strict passed

  bool operator==(const DifferenceReport&) const = default;
};

struct CompareOptions {
  Integer a_max = 1000;
  unsigned jobs = 1;
};

/// Evaluates every allowed M ≤ m_max under both semantics. Throws
/// std::invalid_argument for m_max < 24 or a_max < 1.
DifferenceReport compare_with_strict(const Integer& m_max, const CompareOptions& options = {});

}  // namespace cannonball
