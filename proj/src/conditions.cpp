#include "cannonball/conditions.hpp"

#include <utility>

namespace cannonball {
namespace {

constexpr std::array<std::pair<ConditionId, std::string_view>, 8> kConditionLabels = {{
    {ConditionId::c1_1, "C1.1"},
    {ConditionId::c1_2, "C1.2"},
    {ConditionId::c1_3, "C1.3"},
    {ConditionId::c2, "C2"},
    {ConditionId::c3, "C3"},
    {ConditionId::c4_1, "C4.1"},
    {ConditionId::c4_2, "C4.2"},
    {ConditionId::c4_3, "C4.3"},
}};

}  // namespace

std::string_view label(ConditionId id) { return kConditionLabels[static_cast<std::size_t>(id)].second; }

std::optional<ConditionId> parse_condition(std::string_view text) {
  for (const auto& [id, name] : kConditionLabels)
    if (name == text) return id;
  return std::nullopt;
}

std::string_view label(Status status) { return status == Status::pass ? "pass" : "violated"; }

std::optional<Status> parse_status(std::string_view text) {
  if (text == "pass") return Status::pass;
  if (text == "violated") return Status::violated;
  return std::nullopt;
}

std::string_view label(Semantics semantics) { return semantics == Semantics::strict ? "strict" : "literal"; }

std::optional<Semantics> parse_semantics(std::string_view text) {
  if (text == "strict") return Semantics::strict;
  if (text == "literal") return Semantics::literal;
  return std::nullopt;
}

std::string describe(const Witness& w) {
  std::string out;
  auto field = [&out](std::string_view name, const std::optional<Integer>& v) {
    if (!v) return;
    if (!out.empty()) out += ',';
    out += name;
    out += '=';
    out += to_string(*v);
  };
  field("p", w.p);
  field("e", w.e);
  field("i", w.i);
  field("alpha", w.alpha);
  if (w.modulus && w.residue) {
    if (!out.empty()) out += ',';
    out += to_string(*w.residue) + " mod " + to_string(*w.modulus);
  }
  return out;
}

std::vector<ConditionId> ConditionReport::violated() const {
  std::vector<ConditionId> out;
  for (const auto& v : verdicts)
    if (v.status == Status::violated) out.push_back(v.condition);
  return out;
}

ConditionReport empty_report(const Integer& M, Semantics semantics) {
  ConditionReport report;
  report.m_value = M;
  report.semantics = semantics;
  for (ConditionId id : kAllConditions) report.verdicts[static_cast<std::size_t>(id)].condition = id;
  return report;
}

void finalize(ConditionReport& report) {
  report.overall = Status::pass;
  for (const auto& v : report.verdicts)
    if (v.status == Status::violated) report.overall = Status::violated;
}

}  // namespace cannonball
