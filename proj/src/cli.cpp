#include "cannonball/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cannonball/beeckmans.hpp"
#include "cannonball/classifier.hpp"
#include "cannonball/compare.hpp"
#include "cannonball/refined.hpp"
#include "cannonball/report_json.hpp"
#include "cannonball/sieve.hpp"
#include "cannonball/solver.hpp"

namespace cannonball::cli {
namespace {

struct Options {
  std::string m_text;
  std::string limit_text;
  std::string a_max_text = "1000";
  std::string height_text;
  std::string format = "text";
  std::string mode = "strict";
  int modulus = 0;
  unsigned jobs = 1;
  std::size_t count = 1;
  bool solve = false;
  bool pell = false;
};

std::string_view label(PellOutcome outcome) {
  switch (outcome) {
    case PellOutcome::satisfied: return "satisfied";
    case PellOutcome::search_exhausted: return "search-exhausted";
    case PellOutcome::none_below_bound: return "none-below-bound";
  }
  return "unknown";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void print_report(std::ostream& out, std::string_view title, const ConditionReport& report) {
  out << title << ": " << cannonball::label(report.overall) << '\n';
  for (ConditionId id : report.violated()) {
    out << "  " << cannonball::label(id) << ':';
    for (const auto& w : report[id].witnesses) {
      out << ' ';
      if (!w.family.empty()) out << w.family << ' ';
      out << '[' << describe(w) << ']';
    }
    out << '\n';
  }
}

std::string solution_text(const Solution& s) { return "a = " + to_string(s.start) + ", s = " + to_string(s.root); }

int cmd_check(const Options& o, std::ostream& out) {
  const Integer M = parse_integer(o.m_text);
  const ClassDecomposition cls = classify(M);
  const ConditionReport strict = check_all(M);
  std::optional<ConditionReport> literal;
  if (cls.decomposition) literal = refined_check(M);

  std::optional<Integer> a_max;
  std::optional<Solution> first;
  if (o.solve) {
    a_max = parse_integer(o.a_max_text);
    auto found = brute_force(M, *a_max);
    if (!found.empty()) first = found.front();
  }

  const bool pass = cls.allowed() && strict.passed() && (!literal || literal->passed());
  const std::string_view verdict = !cls.allowed() ? "excluded" : pass ? "pass" : "violated";

  if (o.format == "json") {
    Json j{{"M", integer_to_json(M)}, {"classification", cls}, {"beeckmans", strict}};
    j["refined"] = literal ? Json(*literal) : Json(nullptr);
    if (a_max) {
      Json search{{"a_max", integer_to_json(*a_max)}};
      search["first_solution"] = first ? Json(*first) : Json(nullptr);
      j["search"] = search;
    }
    j["verdict"] = verdict;
    print_json(out, j);
  } else {
    out << "M = " << M << '\n';
    out << "class: " << describe(cls.verdict) << ", m = " << cls.m;
    if (cls.decomposition) {
      const auto& d = *cls.decomposition;
      out << ", mu = " << d.mu << ", m1 = " << d.m1 << " (M = " << 12 * d.A << "*" << d.m1 << " + " << d.B * d.mu
          << ")";
    }
    out << '\n';
    print_report(out, "beeckmans", strict);
    if (literal)
      print_report(out, "refined", *literal);
    else
      out << "refined: not-applicable\n";
    if (a_max) out << "search a <= " << *a_max << ": " << (first ? solution_text(*first) : "none") << '\n';
    out << "verdict: " << verdict << '\n';
  }
  return pass ? kSuccess : kNegative;
}

int cmd_sieve(const Options& o, std::ostream& out) {
  SieveOptions options;
  options.mode = *parse_sieve_mode(o.mode);
  options.solve = o.solve;
  options.a_max = parse_integer(o.a_max_text);
  options.jobs = o.jobs;
  const Integer limit = parse_integer(o.limit_text);
  const auto rows = sieve(limit, options);

  if (o.format == "json") {
    Json j{{"limit", integer_to_json(limit)}, {"mode", o.mode}, {"solve", o.solve}};
    if (o.solve) j["a_max"] = integer_to_json(options.a_max);
    j["rows"] = rows;
    print_json(out, j);
  } else if (o.format == "csv") {
    out << csv_header() << '\n';
    for (const auto& row : rows) out << csv_line(row) << '\n';
  } else {
    out << std::left << std::setw(8) << "M" << std::setw(22) << "class" << std::setw(11) << "beeckmans"
        << std::setw(16) << "refined" << "first_solution\n";
    for (const auto& row : rows) {
      std::ostringstream line;
      line << std::left << std::setw(8) << to_string(row.m_value) << std::setw(22) << row.class_verdict
           << std::setw(11) << cannonball::label(row.beeckmans) << std::setw(16) << cannonball::label(row.refined);
      if (row.first_solution)
        line << '(' << row.first_solution->start << ", " << row.first_solution->root << ')';
      else if (o.solve)
        line << '-';
      std::string text = line.str();
      text.erase(text.find_last_not_of(' ') + 1);
      out << text << '\n';
    }
    out << rows.size() << " survivors\n";
  }
  return kSuccess;
}

void print_entries(std::ostream& out, std::string_view title, const std::vector<DifferenceEntry>& entries) {
  out << title << ": " << entries.size() << '\n';
  for (const auto& e : entries) {
    out << "  " << std::left << std::setw(8) << to_string(e.m_value);
    const ConditionReport& violated = e.strict.passed() ? e.literal : e.strict;
    out << cannonball::label(violated.semantics);
    for (ConditionId id : violated.violated()) out << ' ' << cannonball::label(id);
    out << "  search a <= " << e.a_max << ": " << (e.solution ? solution_text(*e.solution) : "none") << '\n';
  }
}

int cmd_diff(const Options& o, std::ostream& out) {
  CompareOptions options;
  options.a_max = parse_integer(o.a_max_text);
  options.jobs = o.jobs;
  const auto report = compare_with_strict(parse_integer(o.limit_text), options);
  if (o.format == "json") {
    print_json(out, Json(report));
  } else {
    print_entries(out, "strict violated, literal passed (a)", report.strict_only);
    print_entries(out, "literal violated, strict passed (b)", report.literal_only);
  }
  return report.strict_only.empty() ? kSuccess : kNegative;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto residues = allowed_residues(o.modulus);
  if (o.format == "json") {
    Json rows = Json::array();
    for (int r : residues)
      rows.push_back(Json{{"residue", integer_to_json(r)}, {"class", residue_class_label(o.modulus, r)}});
    print_json(out, Json{{"modulus", integer_to_json(o.modulus)}, {"residues", rows}});
  } else if (o.format == "csv") {
    out << "residue,class\n";
    for (int r : residues) out << r << ',' << residue_class_label(o.modulus, r) << '\n';
  } else {
    out << "allowed residues mod " << o.modulus << ":\n";
    for (int r : residues) out << "  " << std::left << std::setw(4) << r << residue_class_label(o.modulus, r) << '\n';
  }
  return kSuccess;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Integer M = parse_integer(o.m_text);
  const Integer a_max = parse_integer(o.a_max_text);
  if (M <= 1) throw std::invalid_argument("solve: M must be > 1");
  if (a_max < 1) throw std::invalid_argument("solve: a_max must be >= 1");

  std::vector<Solution> solutions;
  std::optional<PellResult> pell;
  Integer height;
  if (o.pell) {
    // The default height covers every a ≤ a_max.
    height = o.height_text.empty() ? Integer{3 * (2 * a_max + M - 1)} : parse_integer(o.height_text);
    pell = solve_pell(to_pell(M), o.count, height);
    solutions = pell->solutions;
  } else {
    solutions = brute_force(M, a_max, o.jobs);
  }

  if (o.format == "json") {
    Json j{{"M", integer_to_json(M)}, {"method", o.pell ? "pell" : "brute-force"}, {"a_max", integer_to_json(a_max)}};
    if (pell) {
      j["height"] = integer_to_json(height);
      j["count"] = integer_to_json(Integer{static_cast<unsigned long>(o.count)});
      j["outcome"] = label(pell->outcome);
      j["all_classes_found"] = pell->all_classes_found;
      j["complete_through_k"] = integer_to_json(pell->complete_through_k);
    }
    j["solutions"] = solutions;
    print_json(out, j);
  } else {
    out << "M = " << M << '\n';
    if (pell) {
      out << "method: pell, |Y| <= " << height << ", count " << o.count << '\n';
      out << "outcome: " << label(pell->outcome) << '\n';
      out << "all classes reached: " << (pell->all_classes_found ? "yes" : "no") << '\n';
      out << "complete through k = " << pell->complete_through_k << '\n';
    } else {
      out << "method: brute force, a <= " << a_max << '\n';
    }
    for (const auto& s : solutions) out << solution_text(s) << '\n';
    if (solutions.empty()) out << "no solutions found (this does not show that none exist)\n";
  }
  return solutions.empty() ? kNegative : kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Consecutive squares summing to a square: congruence conditions and solution search", "cannonball"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&o](CLI::App* cmd, std::vector<std::string> formats) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(formats)));
  };
  auto add_jobs = [&o](CLI::App* cmd) {
    cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  };

  auto* check = app.add_subcommand("check", "Classify M and evaluate the strict and literal conditions");
  check->add_option("M", o.m_text, "Number of consecutive squares")->required();
  check->add_flag("--solve", o.solve, "Also search for a solution");
  check->add_option("--a-max", o.a_max_text, "Largest start a searched")->capture_default_str();
  add_format(check, {"text", "json"});

  auto* sieve_cmd = app.add_subcommand("sieve", "List the survivors up to a limit");
  sieve_cmd->add_option("limit", o.limit_text, "Largest M")->required();
  sieve_cmd->add_option("--mode", o.mode, "Condition suite")
      ->check(CLI::IsMember({"strict", "literal", "both"}))
      ->capture_default_str();
  sieve_cmd->add_flag("--solve", o.solve, "Search each survivor for a solution");
  sieve_cmd->add_option("--a-max", o.a_max_text, "Largest start a searched")->capture_default_str();
  add_format(sieve_cmd, {"text", "json", "csv"});
  add_jobs(sieve_cmd);

  auto* diff = app.add_subcommand("diff", "Compare the strict and literal suites up to a limit");
  diff->add_option("limit", o.limit_text, "Largest M (at least 24)")->required();
  diff->add_option("--a-max", o.a_max_text, "Largest start a searched")->capture_default_str();
  add_format(diff, {"text", "json"});
  add_jobs(diff);

  auto* table = app.add_subcommand("table", "Allowed residues for modulus 12, 24 or 72");
  table->add_option("modulus", o.modulus, "Modulus")->required();
  add_format(table, {"text", "json", "csv"});

  auto* solve = app.add_subcommand("solve", "Search for runs of M squares summing to a square");
  solve->add_option("M", o.m_text, "Number of consecutive squares")->required();
  solve->add_option("--a-max", o.a_max_text, "Largest start a searched")->required();
  auto* pell = solve->add_flag("--pell", o.pell, "Use the Pell equation route");
  solve->add_option("--height", o.height_text, "Largest |Y| for base solutions (default covers a-max)")->needs(pell);
  solve->add_option("--count", o.count, "Number of solutions wanted")->needs(pell)->check(CLI::PositiveNumber);
  add_format(solve, {"text", "json"});
  add_jobs(solve);

  std::vector<const char*> argv{"cannonball"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (sieve_cmd->parsed()) return cmd_sieve(o, out);
    if (diff->parsed()) return cmd_diff(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace cannonball::cli
