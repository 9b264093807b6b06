// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact; runtime targets are part of the pass condition where one is set.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cannonball/beeckmans.hpp"
#include "cannonball/classifier.hpp"
#include "cannonball/compare.hpp"
#include "cannonball/refined.hpp"
#include "cannonball/sieve.hpp"
#include "cannonball/solver.hpp"

using namespace cannonball;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double target_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream timing;
  timing << std::fixed;
  timing.precision(2);
  timing << seconds << " s";
  if (target_seconds > 0) {
    timing << " (target < " << target_seconds << " s)";
    if (seconds >= target_seconds) out.pass = false;
  }
  if (!out.pass) ++failures;
  std::printf("[%s] %02d %-26s tolerance=exact  %s  %s\n", out.pass ? "PASS" : "FAIL", id, name,
              timing.str().c_str(), out.detail.c_str());
  std::fflush(stdout);
}

void info(const std::string& text) { std::printf("       %s\n", text.c_str()); }

template <typename Range>
std::string join(const Range& values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    os << (first ? "" : ", ") << v;
    first = false;
  }
  return os.str();
}

bool is_excluded_mod12(long M) {
  long r = M % 12;
  return r == 3 || r == 5 || r == 6 || r == 7 || r == 8 || r == 10;
}

std::string literal_hits(const ConditionReport& report) {
  std::ostringstream os;
  bool first = true;
  for (ConditionId id : report.violated())
    for (const auto& w : report[id].witnesses) {
      os << (first ? "" : "; ") << label(id) << ' ' << w.family << " [" << describe(w) << ']';
      first = false;
    }
  return os.str();
}

// Residue-loop reading of C4.2 (offset −1) and C4.3 (offset 0).
bool loop_violates(long M, long offset) {
  for (int alpha = 2; alpha <= 40; ++alpha) {
    long mod = 1L << (alpha + 2);
    long target = (1L << alpha) + offset;
    if (((M - target) % mod + mod) % mod == 0) return true;
  }
  return false;
}

}  // namespace

int main() {
  criterion(1, "exclusion-classes", 10, [] {
    long count = 0;
    std::vector<long> survivors;
    for (long M = 2; M <= 10000; ++M) {
      if (!is_excluded_mod12(M)) continue;
      ++count;
      if (check_all(Integer{M}).passed()) survivors.push_back(M);
    }
    return Outcome{survivors.empty(), std::to_string(count) + " excluded-class M <= 10^4, passing strict: [" +
                                          join(survivors) + "]"};
  });

  criterion(2, "allowed-class-table", 0, [] {
    const std::set<int> expected = {0, 24, 9, 33, 1, 25, 49, 2, 26, 50, 16, 40, 64, 11, 23, 35, 47, 59, 71};
    const auto r72 = allowed_residues(72);
    const std::set<int> got(r72.begin(), r72.end());
    long mismatches = 0;
    for (long M = 2; M <= 10000; ++M)
      if (classify(Integer{M}).allowed() != (expected.count(static_cast<int>(M % 72)) == 1)) ++mismatches;
    return Outcome{got == expected && r72.size() == 19 && mismatches == 0,
                   std::to_string(r72.size()) + " residues mod 72, pointwise mismatches for M <= 10^4: " +
                       std::to_string(mismatches)};
  });

  criterion(3, "25-and-842", 60, [] {
    const bool strict = check_all(25).passed() && check_all(842).passed();
    const auto s25 = brute_force(25, 1000000);
    const auto s842 = brute_force(842, 100000);
    return Outcome{strict && s25.empty() && s842.empty(),
                   std::string("strict pass: ") + (strict ? "both" : "no") +
                       ", solutions a <= 10^6 for 25: " + std::to_string(s25.size()) +
                       ", a <= 10^5 for 842: " + std::to_string(s842.size())};
  });

  criterion(4, "literal-rejection-of-25", 0, [] {
    const auto dec = classify(25).decomposition;
    const auto report = refined_check(25);
    bool hit = false;
    for (const auto& w : report[ConditionId::c2].witnesses)
      hit = hit || (w.family.rfind("mu1.C2", 0) == 0 && w.p == Integer{5} && w.i == Integer{0} &&
                    w.modulus == Integer{5} && w.residue == Integer{1});
    return Outcome{dec && dec->mu == 1 && hit, "refined(25): " + literal_hits(report)};
  });

  criterion(5, "necessity", 300, [] {
    const std::vector<long> known = {2, 11, 23, 24, 26, 33, 47, 49, 50, 59, 73, 74, 88, 96, 97};
    RefinedEvaluator evaluator(1000);
    std::vector<long> solvable, strict_fail, literal_fail, known_missing;
    std::vector<std::string> flagged;
    for (long M = 2; M <= 1000; ++M) {
      auto found = brute_force(Integer{M}, 10000);
      if (found.empty()) continue;
      solvable.push_back(M);
      if (!check_all(Integer{M}).passed()) strict_fail.push_back(M);
      auto literal = evaluator.check(Integer{M});
      if (!literal.passed()) {
        literal_fail.push_back(M);
        std::ostringstream os;
        os << M << " solved by a=" << found.front().start << ", s=" << found.front().root << " yet "
           << literal_hits(literal);
        flagged.push_back(os.str());
      }
    }
    const std::set<long> solvable_set(solvable.begin(), solvable.end());
    std::vector<long> known_literal_fail;
    for (long M : known) {
      if (!solvable_set.count(M)) known_missing.push_back(M);
      if (!evaluator.check(Integer{M}).passed()) known_literal_fail.push_back(M);
    }
    const bool strict_ok = strict_fail.empty() && known_missing.empty();
    const bool literal_ok = known_literal_fail.empty();
    Outcome out{strict_ok && literal_ok,
                std::to_string(solvable.size()) + " solvable M <= 1000 (a <= 10^4); strict failures: [" +
                    join(strict_fail) + "]; known set literal failures: [" + join(known_literal_fail) + "]"};
    if (!literal_fail.empty()) {
      info("counterexamples: solvable M rejected by the literal families, all " + std::to_string(literal_fail.size()) +
           ": [" + join(literal_fail) + "]");
      for (const auto& line : flagged) info("  " + line);
    }
    return out;
  });

  criterion(6, "rewriting-completeness", 0, [] {
    const auto report = compare_with_strict(10000, {.a_max = 1000, .jobs = 1});
    std::vector<std::string> a;
    for (const auto& e : report.strict_only) a.push_back(to_string(e.m_value));
    bool has25 = false;
    bool annotated = true;
    std::vector<std::string> solved;
    for (const auto& e : report.literal_only) {
      has25 = has25 || e.m_value == 25;
      annotated = annotated && e.a_max == 1000;
      if (e.solution) solved.push_back(to_string(e.m_value));
    }
    info("set (b) members with a solution at a <= 10^3 (reported, not asserted): " + std::to_string(solved.size()) +
         ": [" + join(solved) + "]");
    return Outcome{a.empty() && has25 && annotated,
                   "set (a): [" + join(a) + "], set (b): " + std::to_string(report.literal_only.size()) +
                       " members, 25 in (b): " + (has25 ? "yes" : "no")};
  });

  criterion(7, "class-consistency", 0, [] {
    RefinedEvaluator evaluator(10000);
    std::vector<long> missed;
    long count = 0;
    for (long start : {48L, 57L})
      for (long M = start; M <= 10000; M += 72) {
        ++count;
        if (evaluator.check(Integer{M}).passed()) missed.push_back(M);
      }
    return Outcome{missed.empty(), std::to_string(count) + " M = 48, 57 (mod 72) <= 10^4; literal passes: [" +
                                       join(missed) + "]"};
  });

  criterion(8, "closed-form-sequences", 0, [] {
    const std::vector<long> pow4 = {1, 5, 21, 85, 341, 1365};
    const std::vector<long> five = {1, 6, 26, 106, 426, 1706};
    const std::vector<long> nine = {1, 10, 91, 820, 7381};
    bool ok = true;
    for (unsigned n = 1; n <= 6; ++n) ok = ok && footnote_sequence(FootnoteSequence::pow4_div3, n) == pow4[n - 1];
    for (unsigned n = 1; n <= 6; ++n) ok = ok && footnote_sequence(FootnoteSequence::five_pow4_div3, n) == five[n - 1];
    for (unsigned n = 1; n <= 5; ++n) ok = ok && footnote_sequence(FootnoteSequence::pow9_div8, n) == nine[n - 1];
    return Outcome{ok, "6/6/5 terms compared"};
  });

  criterion(9, "solver-cross-validation", 0, [] {
    std::vector<long> disagree;
    long emitted = 0;
    bool verified = true;
    for (long M = 2; M <= 200; ++M) {
      const auto brute = brute_force(Integer{M}, 1000);
      const auto pell = pell_solutions(Integer{M}, 1000);
      if (brute != pell) disagree.push_back(M);
      for (const auto& s : pell) verified = verified && verifies(s);
      for (const auto& s : brute) verified = verified && verifies(s);
      emitted += static_cast<long>(pell.size());
    }
    return Outcome{disagree.empty() && verified, std::to_string(emitted) +
                                                     " solutions for M <= 200, a <= 10^3; disagreements: [" +
                                                     join(disagree) + "]"};
  });

  criterion(10, "property-suite", 0, [] {
    long sums = 0, bad_sums = 0;
    for (long M = 1; M <= 200; ++M)
      for (long a = 1; a <= 200; ++a, ++sums)
        if (sum_squares(Integer{a}, Integer{M}) != sum_squares(Integer{a}, Integer{M}, SumMode::direct)) ++bad_sums;

    long forms = 0, bad_forms = 0;
    const RuleDescriptor* c11 = find_rule("mu4.C1.1");
    for (unsigned i = 2; i <= 12; ++i, ++forms) {
      RuleParams p{std::nullopt, i, std::nullopt};
      if (c11->residue(p) != c11->alternate(p)) ++bad_forms;
    }
    for (const char* id : {"mu11.C2.p5", "mu11.C2.p7"}) {
      const RuleDescriptor* r = find_rule(id);
      for (std::uint64_t p : primes_up_to(200)) {
        if (p <= 3 || !r->admits_prime(p % 24)) continue;
        for (unsigned i = 0; i <= 3; ++i, ++forms) {
          RuleParams params{Integer{static_cast<unsigned long>(p)}, i, std::nullopt};
          if (r->residue(params) != r->alternate(params)) ++bad_forms;
        }
      }
    }

    long bad_alpha = 0;
    for (long M = 2; M <= 100000; ++M) {
      const Integer m{M};
      if ((check_condition(m, ConditionId::c4_2).status == Status::violated) != loop_violates(M, -1)) ++bad_alpha;
      if ((check_condition(m, ConditionId::c4_3).status == Status::violated) != loop_violates(M, 0)) ++bad_alpha;
    }
    return Outcome{bad_sums == 0 && bad_forms == 0 && bad_alpha == 0,
                   std::to_string(sums) + " sums, " + std::to_string(forms) + " paired forms, 2x99999 C4.2/C4.3 " +
                       "evaluations; mismatches " + std::to_string(bad_sums) + "/" + std::to_string(bad_forms) + "/" +
                       std::to_string(bad_alpha)};
  });

  // Partition of the strict survivors below 1000 by solver evidence.
  {
    const auto rows = sieve(999, {.mode = SieveMode::strict, .solve = true, .a_max = 10000});
    std::vector<std::string> solved, deeper, open_cases, unresolved;
    for (const auto& row : rows) {
      const std::string M = to_string(row.m_value);
      if (row.first_solution) {
        solved.push_back(M);
      } else if (row.m_value == 25 || row.m_value == 842) {
        open_cases.push_back(M);
      } else {
        const auto pell = solve_pell(to_pell(row.m_value), 1, 1000000);
        if (!pell.solutions.empty())
          deeper.push_back(M + " (a=" + to_string(pell.solutions.front().start) + ")");
        else
          unresolved.push_back(M);
      }
    }
    std::printf("[INFO] strict survivors M < 1000: %zu\n", rows.size());
    info("solved with a <= 10^4: " + std::to_string(solved.size()));
    info("solved beyond a = 10^4 by the Pell route: " + std::to_string(deeper.size()) + ": [" + join(deeper) + "]");
    info("no solution known (25, 842): [" + join(open_cases) + "]");
    info("unresolved (no solution found, not shown unsolvable): " + std::to_string(unresolved.size()) + ": [" +
         join(unresolved) + "]");
  }

  std::printf("%d criterion failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
