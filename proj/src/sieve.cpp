#include "cannonball/sieve.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <stdexcept>
#include <utility>

#include "cannonball/beeckmans.hpp"
#include "cannonball/parallel.hpp"

namespace cannonball {
namespace {

constexpr std::array<std::pair<SieveMode, std::string_view>, 3> kModes = {{
    {SieveMode::strict, "strict"},
    {SieveMode::literal, "literal"},
    {SieveMode::both, "both"},
}};

constexpr std::array<std::pair<RefinedStatus, std::string_view>, 3> kRefinedStatuses = {{
    {RefinedStatus::pass, "pass"},
    {RefinedStatus::violated, "violated"},
    {RefinedStatus::not_applicable, "not-applicable"},
}};

constexpr std::uint64_t kChunk = 512;

void note_violations(const ConditionReport& report, std::vector<ViolationNote>& out) {
  for (ConditionId id : report.violated()) out.push_back({report.semantics, id, report[id].witnesses});
}

}  // namespace

std::string_view label(SieveMode mode) {
  for (const auto& [m, text] : kModes)
    if (m == mode) return text;
  throw std::invalid_argument("unknown SieveMode");
}

std::optional<SieveMode> parse_sieve_mode(std::string_view text) {
  for (const auto& [m, t] : kModes)
    if (t == text) return m;
  return std::nullopt;
}

std::string_view label(RefinedStatus status) {
  for (const auto& [s, text] : kRefinedStatuses)
    if (s == status) return text;
  throw std::invalid_argument("unknown RefinedStatus");
}

std::optional<RefinedStatus> parse_refined_status(std::string_view text) {
  for (const auto& [s, t] : kRefinedStatuses)
    if (t == text) return s;
  return std::nullopt;
}

SieveRow sieve_row(const Integer& M, bool solve, const Integer& a_max, const RefinedEvaluator* evaluator) {
  const ClassDecomposition cls = classify(M);
  SieveRow row;
  row.m_value = M;
  row.class_verdict = describe(cls.verdict);

  const ConditionReport strict = check_all(M);
  row.beeckmans = strict.overall;
  note_violations(strict, row.violations);

  if (cls.decomposition) {
    const ConditionReport literal = evaluator ? evaluator->check(M) : refined_check(M);
    row.refined = literal.passed() ? RefinedStatus::pass : RefinedStatus::violated;
    note_violations(literal, row.violations);
  }

  if (solve) {
    auto found = brute_force(M, a_max);
    if (!found.empty()) row.first_solution = found.front();
  }
  return row;
}

std::vector<SieveRow> sieve(const Integer& limit, const SieveOptions& options) {
  if (limit < 2) throw std::invalid_argument("sieve: limit must be >= 2");
  if (!limit.fits_ulong_p()) throw std::invalid_argument("sieve: limit out of range");
  if (options.solve && options.a_max < 1) throw std::invalid_argument("sieve: a_max must be >= 1");

  const std::uint64_t last = limit.get_ui();
  const RefinedEvaluator evaluator(limit);
  const std::uint64_t chunks = (last - 2) / kChunk + 1;

  auto parts = parallel_map<std::vector<SieveRow>>(chunks, options.jobs, [&](std::size_t k) {
    std::vector<SieveRow> rows;
    const std::uint64_t first = 2 + k * kChunk;
    const std::uint64_t stop = std::min(last, first + kChunk - 1);
    for (std::uint64_t m = first; m <= stop; ++m) {
      const Integer M{static_cast<unsigned long>(m)};
      const ClassDecomposition cls = classify(M);
      if (!cls.allowed()) continue;

      // Cheap rejection under the selected mode before building the full row.
      if (options.mode != SieveMode::literal && !check_all(M).passed()) continue;
      if (options.mode != SieveMode::strict && !evaluator.check(M).passed()) continue;
      rows.push_back(sieve_row(M, options.solve, options.a_max, &evaluator));
    }
    return rows;
  });

  std::vector<SieveRow> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

}  // namespace cannonball
