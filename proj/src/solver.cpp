#include "cannonball/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <set>
#include <stdexcept>

#include "cannonball/factor.hpp"
#include "cannonball/fixed_width.hpp"
#include "cannonball/parallel.hpp"

namespace cannonball {
namespace {

using detail::u128;

// solve_pell widens its Y cap by about one unit power per round.
constexpr int kMaxExtensionRounds = 32;
constexpr std::size_t kMaxOrbitSteps = 100'000;

std::uint64_t as_u64(const Integer& n, const char* what) {
  if (sgn(n) < 0 || !n.fits_ulong_p()) throw std::invalid_argument(std::string(what) + " out of range");
  return n.get_ui();
}

std::vector<Solution> scan_starts(const Integer& M, std::uint64_t first, std::uint64_t last) {
  std::vector<Solution> found;
  if (first > last) return found;
  Integer sum = sum_squares(Integer{static_cast<unsigned long>(first)}, M);
  const Integer sum_last = sum_squares(Integer{static_cast<unsigned long>(last)}, M);

  // sum(a+1) = sum(a) + (a+M)² − a² = sum(a) + M(2a + M)
  if (mpz_sizeinbase(sum_last.get_mpz_t(), 2) <= 125) {
    const u128 m = detail::to_u128(M);
    u128 s = detail::to_u128(sum);
    for (std::uint64_t a = first;; ++a) {
      if (auto r = detail::square_root_u128(s))
        found.push_back({M, Integer{static_cast<unsigned long>(a)}, detail::from_u128(*r)});
      if (a == last) break;
      s += m * (2 * u128{a} + m);
    }
    return found;
  }

  for (std::uint64_t a = first;; ++a) {
    Integer start{static_cast<unsigned long>(a)};
    if (auto r = is_perfect_square(sum)) found.push_back({M, start, *r});
    if (a == last) break;
    sum += M * (2 * start + M);
  }
  return found;
}

Integer abs_value(const Integer& n) { return sgn(n) < 0 ? Integer{-n} : n; }

// All (X, Y) with X ≥ 0, 0 ≤ Y ≤ height and X² − DY² = N.
std::vector<std::pair<Integer, Integer>> base_points(const PellProblem& problem, const Integer& height) {
  std::vector<std::pair<Integer, Integer>> out;
  if (height < 0) return out;
  const Integer top = problem.N + problem.D * height * height;

  if (height.fits_ulong_p() && mpz_sizeinbase(top.get_mpz_t(), 2) <= 125) {
    const u128 d = detail::to_u128(problem.D);
    u128 value = detail::to_u128(problem.N);
    const std::uint64_t h = height.get_ui();
    for (std::uint64_t y = 0;; ++y) {
      if (auto x = detail::square_root_u128(value))
        out.emplace_back(detail::from_u128(*x), Integer{static_cast<unsigned long>(y)});
      if (y == h) break;
      value += d * (2 * u128{y} + 1);
    }
    return out;
  }

  Integer value = problem.N;
  for (Integer y = 0; y <= height; ++y) {
    if (auto x = is_perfect_square(value)) out.emplace_back(*x, y);
    value += problem.D * (2 * y + 1);
  }
  return out;
}

using PointSet = std::set<std::pair<Integer, Integer>>;  // (|Y|, |X|)

// Walks the orbit of (x, y) under multiplication by the unit in both
// directions (through the conjugate base), recording every point with
// |Y| ≤ cap.
void walk_orbit(const PellProblem& problem, const PellUnit& unit, const Integer& x, const Integer& y,
                const Integer& cap, PointSet& points) {
  for (int sign : {1, -1}) {
    if (sign == -1 && sgn(y) == 0) break;
    Integer cx = x;
    Integer cy = sign * y;
    Integer prev_abs_y = abs_value(cy);
    for (std::size_t step = 0; step < kMaxOrbitSteps; ++step) {
      Integer ay = abs_value(cy);
      if (ay <= cap) points.emplace(ay, abs_value(cx));
      if (step > 0 && ay > cap && ay > prev_abs_y) break;
      prev_abs_y = ay;
      Integer nx = cx * unit.x + problem.D * cy * unit.y;
      Integer ny = cx * unit.y + cy * unit.x;
      cx = std::move(nx);
      cy = std::move(ny);
    }
  }
}

// Every (X, Y) with X, Y ≥ 0 and X² − r²Y² = N, from divisor pairs d·e = N.
std::vector<std::pair<Integer, Integer>> square_points(const PellProblem& problem, const Integer& r) {
  const Integer& M = problem.m_value;
  const FactoredInteger parts[] = {factorize(3), factorize(M), factorize(M - 1), factorize(M + 1)};
  const FactoredInteger n = multiply(parts);
  if (n.value() != problem.N) throw std::logic_error("square_points: factorization of N does not match");

  std::vector<std::pair<Integer, Integer>> out;
  for (const Integer& d : divisors(n)) {
    if (d * d > problem.N) break;
    Integer e = problem.N / d;
    if (((d + e) & 1) != 0) continue;
    Integer gap = (e - d) / 2;
    if (gap % r != 0) continue;
    out.emplace_back((d + e) / 2, gap / r);
  }
  return out;
}

std::vector<Solution> admissible_solutions(const PellProblem& problem, const PointSet& points) {
  std::vector<Solution> out;
  for (const auto& [y, x] : points)
    if (problem.admissible(x, y)) out.push_back(problem.to_solution(x, y));
  std::sort(out.begin(), out.end(), [](const Solution& a, const Solution& b) { return a.start < b.start; });
  for (const auto& s : out)
    if (!verifies(s)) throw std::logic_error("Pell route produced a non-solution");
  return out;
}

PointSet collect(const PellProblem& problem, const PellUnit& unit,
                 const std::vector<std::pair<Integer, Integer>>& bases, const Integer& cap) {
  PointSet points;
  for (const auto& [x, y] : bases) walk_orbit(problem, unit, x, y, cap, points);
  return points;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Solution& s) {
  return os << "(M=" << s.m_value << ", a=" << s.start << ", s=" << s.root << ')';
}

bool verifies(const Solution& s) {
  if (s.m_value < 1 || s.start < 1 || s.root < 0) return false;
  return sum_squares(s.start, s.m_value) == s.root * s.root;
}

std::vector<Solution> brute_force(const Integer& M, const Integer& a_max, unsigned jobs) {
  if (M <= 1) throw std::invalid_argument("brute_force: M must be > 1");
  if (a_max < 1) throw std::invalid_argument("brute_force: a_max must be >= 1");
  const std::uint64_t last = as_u64(a_max, "brute_force: a_max");

  const std::uint64_t chunks = jobs <= 1 ? 1 : std::min<std::uint64_t>(last, std::uint64_t{jobs} * 4);
  const std::uint64_t width = (last + chunks - 1) / chunks;
  auto parts = parallel_map<std::vector<Solution>>(chunks, jobs, [&](std::size_t k) {
    std::uint64_t first = 1 + k * width;
    return scan_starts(M, first, std::min(last, first + width - 1));
  });

  std::vector<Solution> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

bool PellProblem::admissible(const Integer& X, const Integer& Y) const {
  if (X <= 0 || Y <= 0) return false;
  if (X % 6 != 0 || Y % 3 != 0) return false;
  if (X * X - D * Y * Y != N) return false;
  Integer k = Y / 3;
  if (k < m_value + 1) return false;
  return ((k - m_value + 1) & 1) == 0;
}

Solution PellProblem::to_solution(const Integer& X, const Integer& Y) const {
  if (!admissible(X, Y)) throw std::invalid_argument("PellProblem::to_solution: inadmissible point");
  Integer k = Y / 3;
  return {m_value, Integer{(k - m_value + 1) / 2}, Integer{X / 6}};
}

std::pair<Integer, Integer> PellProblem::point_of(const Solution& s) const {
  return {6 * s.root, 3 * (2 * s.start + s.m_value - 1)};
}

PellProblem to_pell(const Integer& M) {
  if (M <= 1) throw std::invalid_argument("to_pell: M must be > 1");
  return {M, M, 3 * M * (M * M - 1)};
}

PellUnit fundamental_unit(const Integer& D) {
  if (D < 2) throw std::invalid_argument("fundamental_unit: D must be >= 2");
  const Integer a0 = isqrt(D);
  if (a0 * a0 == D) throw std::invalid_argument("fundamental_unit: D is a perfect square");

  Integer m = 0;
  Integer d = 1;
  Integer a = a0;
  Integer p_prev = 1;
  Integer p = a0;
  Integer q_prev = 0;
  Integer q = 1;
  while (p * p - D * q * q != 1) {
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
    Integer p_next = a * p + p_prev;
    Integer q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  return {p, q};
}

Integer class_bound(const Integer& N, const PellUnit& unit) {
  if (N <= 0) throw std::invalid_argument("class_bound: N must be positive");
  Integer num = unit.y * unit.y * N;
  Integer den = 2 * (unit.x + 1);
  Integer ceil_quotient = (num + den - 1) / den;
  return isqrt(ceil_quotient) + 1;
}

PellResult solve_pell(const PellProblem& problem, std::size_t count, const Integer& height_bound) {
  if (count < 1) throw std::invalid_argument("solve_pell: count must be >= 1");
  if (height_bound < 0) throw std::invalid_argument("solve_pell: height bound must be >= 0");

  PellResult result;
  std::vector<Solution> found;
  Integer cap = height_bound;

  if (auto r = is_perfect_square(problem.D)) {
    PointSet points;
    for (auto& [x, y] : square_points(problem, *r))
      if (y <= height_bound) points.emplace(y, x);
    found = admissible_solutions(problem, points);
    result.all_classes_found = true;
  } else {
    const PellUnit unit = fundamental_unit(problem.D);
    const Integer bound = class_bound(problem.N, unit);
    const auto bases = base_points(problem, std::min(height_bound, bound));
    result.all_classes_found = height_bound >= bound;
    found = admissible_solutions(problem, collect(problem, unit, bases, cap));
    for (int round = 0; round < kMaxExtensionRounds && found.size() < count && !bases.empty(); ++round) {
      cap *= 2 * unit.x;
      found = admissible_solutions(problem, collect(problem, unit, bases, cap));
    }
  }

  result.complete_through_k = (result.all_classes_found ? cap : height_bound) / 3;
  if (found.size() >= count) {
    found.resize(count);
    result.outcome = PellOutcome::satisfied;
  } else {
    result.outcome = found.empty() ? PellOutcome::none_below_bound : PellOutcome::search_exhausted;
  }
  result.solutions = std::move(found);
  return result;
}

std::vector<Solution> pell_solutions(const Integer& M, const Integer& a_max) {
  const PellProblem problem = to_pell(M);
  const Integer y_max = 3 * (2 * a_max + M - 1);
  PointSet points;
  if (auto r = is_perfect_square(problem.D)) {
    for (auto& [x, y] : square_points(problem, *r))
      if (y <= y_max) points.emplace(y, x);
  } else {
    const PellUnit unit = fundamental_unit(problem.D);
    const auto bases = base_points(problem, std::min(class_bound(problem.N, unit), y_max));
    points = collect(problem, unit, bases, y_max);
  }
  return admissible_solutions(problem, points);
}

std::vector<Solution> solutions_for(const Integer& M, const Integer& a_max, unsigned jobs) {
  std::vector<Solution> direct = brute_force(M, a_max, jobs);
  std::vector<Solution> pell = pell_solutions(M, a_max);
  if (direct != pell)
    throw std::logic_error("solutions_for: brute force and Pell route disagree for M = " + to_string(M));
  return direct;
}

}  // namespace cannonball
