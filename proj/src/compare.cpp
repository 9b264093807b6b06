#include "cannonball/compare.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "cannonball/beeckmans.hpp"
#include "cannonball/classifier.hpp"
#include "cannonball/parallel.hpp"
#include "cannonball/refined.hpp"

namespace cannonball {
namespace {

constexpr std::uint64_t kChunk = 512;

struct Partial {
  std::vector<DifferenceEntry> strict_only;
  std::vector<DifferenceEntry> literal_only;
};

}  // namespace

DifferenceReport compare_with_strict(const Integer& m_max, const CompareOptions& options) {
  if (m_max < 24) throw std::invalid_argument("compare_with_strict: M_max must be >= 24");
  if (!m_max.fits_ulong_p()) throw std::invalid_argument("compare_with_strict: M_max out of range");
  if (options.a_max < 1) throw std::invalid_argument("compare_with_strict: a_max must be >= 1");

  const std::uint64_t last = m_max.get_ui();
  const RefinedEvaluator evaluator(m_max);
  const std::uint64_t chunks = (last - 2) / kChunk + 1;

  auto parts = parallel_map<Partial>(chunks, options.jobs, [&](std::size_t k) {
    Partial partial;
    const std::uint64_t first = 2 + k * kChunk;
    const std::uint64_t stop = std::min(last, first + kChunk - 1);
    for (std::uint64_t m = first; m <= stop; ++m) {
      const Integer M{static_cast<unsigned long>(m)};
      if (!classify(M).allowed()) continue;
      ConditionReport strict = check_all(M);
      ConditionReport literal = evaluator.check(M);
      if (strict.passed() == literal.passed()) continue;

      DifferenceEntry entry{M, std::move(strict), std::move(literal), options.a_max, std::nullopt};
      auto found = brute_force(M, options.a_max);
      if (!found.empty()) entry.solution = found.front();
      (entry.strict.passed() ? partial.literal_only : partial.strict_only).push_back(std::move(entry));
    }
    return partial;
  });

  DifferenceReport report{m_max, options.a_max, {}, {}};
  for (auto& part : parts) {
    std::move(part.strict_only.begin(), part.strict_only.end(), std::back_inserter(report.strict_only));
    std::move(part.literal_only.begin(), part.literal_only.end(), std::back_inserter(report.literal_only));
  }
  return report;
}

}  // namespace cannonball
