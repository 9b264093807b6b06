#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "cannonball/beeckmans.hpp"
#include "cannonball/cli.hpp"
#include "cannonball/report_json.hpp"

using namespace cannonball;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::set<std::string> csv_members(const std::string& text) {
  std::set<std::string> out;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) out.insert(line.substr(0, line.find(',')));
  return out;
}

}  // namespace

TEST(Cli, CheckTwentyFive) {
  auto r = run({"check", "25", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["beeckmans"]["overall"], "pass");
  EXPECT_EQ(j["refined"]["overall"], "violated");
  const Json& w = j["refined"]["verdicts"][3]["witnesses"][0];
  EXPECT_EQ(w["p"], "5");
  EXPECT_EQ(w["i"], "0");
  EXPECT_EQ(j["classification"].get<ClassDecomposition>(), classify(25));
  EXPECT_EQ(j["beeckmans"].get<ConditionReport>(), check_all(25));
}

TEST(Cli, CheckWithSolve) {
  auto r = run({"check", "24", "--solve", "--a-max", "10", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["search"]["first_solution"]["a"], "1");
  EXPECT_EQ(j["search"]["first_solution"]["s"], "70");
  EXPECT_EQ(j["verdict"], "pass");
}

TEST(Cli, CheckExcludedClass) {
  auto r = run({"check", "7"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("ExcludedMod12(7)"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: excluded"), std::string::npos);
}

TEST(Cli, SieveSets) {
  auto strict = run({"sieve", "100", "--mode", "strict", "--format", "csv"});
  EXPECT_EQ(strict.code, 0);
  std::set<std::string> expected = {"2", "11", "23", "24", "25", "26", "33", "47",
                                    "49", "50", "59", "73", "74", "88", "96", "97"};
  EXPECT_EQ(csv_members(strict.out), expected);

  auto literal = run({"sieve", "100", "--mode", "literal", "--format", "csv"});
  for (auto M : {"25", "49", "50", "97"}) expected.erase(M);
  EXPECT_EQ(csv_members(literal.out), expected);
}

TEST(Cli, SieveSolveCarriesSolution) {
  auto r = run({"sieve", "30", "--solve", "--a-max", "100", "--format", "csv"});
  EXPECT_NE(r.out.find("\n24,AllowedMod72(24),pass,pass,1,70,\n"), std::string::npos) << r.out;
}

TEST(Cli, SieveIsDeterministic) {
  for (auto format : {"text", "json", "csv"}) {
    auto a = run({"sieve", "2000", "--solve", "--a-max", "200", "--format", format, "--jobs", "1"});
    auto b = run({"sieve", "2000", "--solve", "--a-max", "200", "--format", format, "--jobs", "3"});
    auto c = run({"sieve", "2000", "--solve", "--a-max", "200", "--format", format, "--jobs", "3"});
    EXPECT_EQ(a.out, b.out) << format;
    EXPECT_EQ(b.out, c.out) << format;
  }
}

TEST(Cli, SieveJsonRoundTrips) {
  auto r = run({"sieve", "200", "--mode", "both", "--solve", "--a-max", "100", "--format", "json"});
  Json j = Json::parse(r.out);
  auto rows = j["rows"].get<std::vector<SieveRow>>();
  EXPECT_EQ(Json(rows), j["rows"]);
  EXPECT_EQ(rows, sieve(200, {.mode = SieveMode::both, .solve = true, .a_max = 100}));
}

TEST(Cli, Diff) {
  auto r = run({"diff", "100", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto report = Json::parse(r.out).get<DifferenceReport>();
  EXPECT_TRUE(report.strict_only.empty());
  EXPECT_EQ(report, compare_with_strict(100));

  auto big = run({"diff", "1000", "--a-max", "50"});
  EXPECT_EQ(big.code, 0);
  EXPECT_NE(big.out.find("\n  25 "), std::string::npos);
  EXPECT_EQ(big.out.find("\n  842 "), std::string::npos);

  EXPECT_EQ(run({"diff", "10"}).code, 2);
}

TEST(Cli, Table) {
  auto r = run({"table", "12", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(csv_members(r.out), (std::set<std::string>{"0", "1", "2", "4", "9", "11"}));
  auto j = Json::parse(run({"table", "72", "--format", "json"}).out);
  EXPECT_EQ(j["residues"].size(), 19u);
  EXPECT_EQ(run({"table", "10"}).code, 2);
}

TEST(Cli, Solve) {
  auto brute = run({"solve", "2", "--a-max", "25", "--format", "json"});
  EXPECT_EQ(brute.code, 0);
  auto solutions = Json::parse(brute.out)["solutions"].get<std::vector<Solution>>();
  EXPECT_EQ(solutions, brute_force(2, 25));

  auto pell = run({"solve", "49", "--a-max", "100", "--pell", "--format", "json"});
  EXPECT_EQ(pell.code, 0);
  Json j = Json::parse(pell.out);
  EXPECT_EQ(j["method"], "pell");
  EXPECT_EQ(j["outcome"], "satisfied");
  EXPECT_EQ(j["solutions"][0]["a"], "25");

  auto none = run({"solve", "25", "--a-max", "1000"});
  EXPECT_EQ(none.code, 1);
  EXPECT_NE(none.out.find("does not show"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"check"}).code, 2);
  EXPECT_EQ(run({"check", "abc"}).code, 2);
  EXPECT_EQ(run({"check", "1"}).code, 2);
  EXPECT_EQ(run({"check", "25", "--format", "csv"}).code, 2);
  EXPECT_EQ(run({"sieve", "1"}).code, 2);
  EXPECT_EQ(run({"sieve", "100", "--mode", "loose"}).code, 2);
  EXPECT_EQ(run({"sieve", "100", "--jobs", "0"}).code, 2);
  EXPECT_EQ(run({"solve", "24"}).code, 2);
  EXPECT_EQ(run({"solve", "24", "--a-max", "10", "--height", "5"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
