#pragma once

// Ground-truth search for runs of consecutive squares that sum to a square.
//
// Two independent routes:
//  * brute force over the start a, updating the sum incrementally;
//  * a generalized Pell equation. With k = 2a + M − 1 the sum equals
//    M(3k² + M² − 1)/12, so  12s² = M(3k² + M² − 1)  and, with X = 6s and
//    Y = 3k,
//        X² − M·Y² = 3M(M² − 1).
//    Solutions of that equation with X ≡ 0 (mod 6), Y ≡ 0 (mod 3),
//    Y/3 ≥ M + 1 and Y/3 ≡ M − 1 (mod 2) map back to (a, s).
//
// Neither route ever certifies that an M has no solution.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "cannonball/arith.hpp"

namespace cannonball {

struct Solution {
  Integer m_value;  ///< number of squares
  Integer start;    ///< a ≥ 1
  Integer root;     ///< s with sum_squares(a, M) = s²

  bool operator==(const Solution&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Solution& solution);

/// True iff sum_squares(start, m_value) == root².
bool verifies(const Solution& solution);

/// All solutions with 1 ≤ a ≤ a_max, ascending in a. Throws
/// std::invalid_argument for M ≤ 1 or a_max < 1.
std::vector<Solution> brute_force(const Integer& M, const Integer& a_max, unsigned jobs = 1);

struct PellProblem {
  Integer m_value;
  Integer D;  ///< = M
  Integer N;  ///< = 3M(M² − 1)

  /// X² − DY² = N together with the divisibility, parity and size
  /// constraints that make (X, Y) correspond to a Solution.
  bool admissible(const Integer& X, const Integer& Y) const;
  /// Requires admissible(X, Y).
  Solution to_solution(const Integer& X, const Integer& Y) const;
  /// (X, Y) = (6s, 3k).
  std::pair<Integer, Integer> point_of(const Solution& solution) const;
};

/// Throws std::invalid_argument for M ≤ 1.
PellProblem to_pell(const Integer& M);

/// Minimal x + y√D > 1 with x² − Dy² = 1, from the continued fraction of √D.
/// Throws std::invalid_argument if D < 2 or D is a perfect square.
struct PellUnit {
  Integer x;
  Integer y;
};
PellUnit fundamental_unit(const Integer& D);

/// Upper bound on |Y| over the fundamental solutions of every class of
/// X² − DY² = N (N > 0): y₁·√N / √(2(x₁ + 1)), rounded up.
Integer class_bound(const Integer& N, const PellUnit& unit);

enum class PellOutcome {
  satisfied,         ///< `count` solutions returned
  search_exhausted,  ///< some solutions found, fewer than `count`
  none_below_bound,  ///< nothing found; says nothing beyond the search range
};

struct PellResult {
  std::vector<Solution> solutions;  ///< ascending in a
  PellOutcome outcome = PellOutcome::none_below_bound;
  /// Every class representative was reached (height bound covered the class
  /// bound, or D is a square and the divisor enumeration is exact).
  bool all_classes_found = false;
  /// Every Solution with k = 2a + M − 1 up to this value is in the list (or
  /// would have been, had `count` not truncated it).
  Integer complete_through_k;
};

/// Base solutions with |Y| ≤ height_bound, then each class is walked with the
/// fundamental unit (non-square D). For square D = r² the finite solution set
/// comes from the divisor pairs of N, restricted to |Y| ≤ height_bound.
/// Throws std::invalid_argument for count < 1 or height_bound < 0.
PellResult solve_pell(const PellProblem& problem, std::size_t count, const Integer& height_bound);

/// Every Solution with a ≤ a_max through the Pell route only.
std::vector<Solution> pell_solutions(const Integer& M, const Integer& a_max);

/// Union of brute_force and pell_solutions (ascending, de-duplicated). The two
/// routes must agree; a disagreement throws std::logic_error.
std::vector<Solution> solutions_for(const Integer& M, const Integer& a_max, unsigned jobs = 1);

}  // namespace cannonball
