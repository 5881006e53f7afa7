#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"

namespace toposbench::cli {
namespace {

using nlohmann::json;

const std::filesystem::path kFixtures = TOPOSBENCH_FIXTURE_DIR;

struct Result {
  int code;
  json report;
  std::string raw;
  std::string summary;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "toposbench");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  json report;
  try {
    report = json::parse(out.str());
  } catch (const json::parse_error&) {
  }
  return {code, report, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (kFixtures / name).string(); }

std::filesystem::path scratch_file(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "toposbench_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, ValidateFixtures) {
  const Result r = invoke({"validate", fixture("automaton.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.report["valid"].get<bool>());
  EXPECT_EQ(r.report["kind"], "model");
  EXPECT_EQ(r.report["command"], "validate");
  EXPECT_FALSE(r.report.contains("timings_ms"));

  const Result tm = invoke({"validate", fixture("tm_branch.json")});
  EXPECT_EQ(tm.code, kExitOk);
  EXPECT_EQ(tm.report["kind"], "tm");
  EXPECT_FALSE(tm.report["deterministic"].get<bool>());
}

TEST(Cli, ValidateReportsLawViolations) {
  const auto path = scratch_file("unnatural.json", R"({
    "monoids": {"Z2": {"elements": ["1", "s"], "unit": "1",
                       "table": {"1*1": "1", "1*s": "s", "s*1": "s", "s*s": "1"}}},
    "presheaves": {"P": {"base": "Z2", "carriers": {"*": ["p", "q"]}, "action": {"s": {"p": "q", "q": "p"}}},
                   "Q": {"base": "Z2", "carriers": {"*": ["p", "q"]}, "action": {"s": {"p": "p", "q": "q"}}}},
    "morphisms": {"h": {"source": "P", "target": "Q", "components": {"*": {"p": "p", "q": "q"}}}}})");
  const Result r = invoke({"validate", path.string()});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_FALSE(r.report["valid"].get<bool>());
  EXPECT_EQ(r.report["violation"]["code"], "NaturalityViolation");
  EXPECT_NE(r.report["violation"]["message"].get<std::string>().find("'s'"), std::string::npos);
}

TEST(Cli, MalformedInputExitsWithTwo) {
  EXPECT_EQ(invoke({"validate", scratch_file("empty.json", "").string()}).code, kExitMalformed);
  EXPECT_EQ(invoke({"validate", scratch_file("keys.json", R"({"colour": 1})").string()}).code, kExitMalformed);
  const Result missing = invoke({"monos", fixture("automaton.json"), "--from", "Nope", "--to", "A"});
  EXPECT_EQ(missing.code, kExitMalformed);
  EXPECT_EQ(missing.report["error"]["code"], "UnknownObject");
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitMalformed);
  EXPECT_EQ(invoke({}).code, kExitMalformed);
  const Result bad_tm = invoke({"tm", "run", scratch_file("tm.json", R"({"states": ["q"], "alphabet": [" "],
      "q0": "q", "qf": "z", "delta": {}})").string()});
  EXPECT_EQ(bad_tm.code, kExitMalformed);
}

TEST(Cli, MonosCountsFrozen) {
  const Result b1 = invoke({"monos", fixture("automaton.json"), "--from", "B1", "--to", "A"});
  const Result b2 = invoke({"monos", fixture("automaton.json"), "--from", "B2", "--to", "A"});
  const Result b3 = invoke({"monos", fixture("automaton.json"), "--from", "B3", "--to", "A"});
  EXPECT_EQ(b1.report["count"], 1);
  EXPECT_EQ(b2.report["count"], 0);
  EXPECT_EQ(b3.report["count"], 1);
  EXPECT_EQ(b3.report["monos"][0]["*"]["Y"], "q2");
  EXPECT_EQ(b3.report["monos"][0]["*"]["Z"], "q3");
}

TEST(Cli, FinitenessVerdicts) {
  const Result omega = invoke({"finiteness", fixture("arrow.json"), "--object", "Omega", "--notion", "dedekind"});
  EXPECT_EQ(omega.code, kExitOk);
  EXPECT_TRUE(omega.report["verdict"].get<bool>());
  EXPECT_EQ(omega.report["truth_value"]["0"], "{id0,u}");

  const Result chain2 = invoke({"finiteness", fixture("chain_2.json"), "--object", "chainM", "--notion", "lp:1"});
  EXPECT_FALSE(chain2.report["verdict"].get<bool>());
  const Result chain2b = invoke({"finiteness", fixture("chain_2.json"), "--object", "chainM", "--notion", "lp:2"});
  EXPECT_TRUE(chain2b.report["verdict"].get<bool>());
  EXPECT_EQ(chain2b.report["variants"].size(), 4u);

  const Result x = invoke({"finiteness", fixture("arrow.json"), "--object", "X", "--notion", "kuratowski"});
  // X is subterminal but empty at 0, so no singleton reaches stage 0.
  EXPECT_FALSE(x.report["verdict"].get<bool>());
  EXPECT_FALSE(x.report["direct_sentence"]["holds"].get<bool>());
  EXPECT_EQ(x.report["failing_stages"], json::parse(R"(["0"])"));
  const Result y = invoke({"finiteness", fixture("arrow.json"), "--object", "Y", "--notion", "kuratowski"});
  EXPECT_TRUE(y.report["verdict"].get<bool>());
  const Result x_ext = invoke({"finiteness", fixture("arrow.json"), "--object", "X", "--notion", "kuratowski",
                               "--mode", "external"});
  EXPECT_FALSE(x_ext.report["verdict"].get<bool>());

  const Result sets = invoke({"finiteness", fixture("sets.json"), "--object", "anySet", "--notion", "dedekind",
                              "--mode", "external"});
  EXPECT_TRUE(sets.report["verdict"].get<bool>());
  EXPECT_EQ(sets.report["monos"], 6);
}

TEST(Cli, HoldsAndSyntaxErrors) {
  const Result t = invoke({"holds", fixture("sets.json"), "--formula", "true"});
  EXPECT_EQ(t.code, kExitOk);
  EXPECT_TRUE(t.report["holds"].get<bool>());

  const Result ext = invoke({"holds", fixture("arrow.json"), "--formula",
                             "(forall x:X. F(x) = G(x)) => F = G", "--bind", "X=X", "--bind", "Y=Y"});
  EXPECT_EQ(ext.code, kExitOk);
  EXPECT_TRUE(ext.report["holds"].get<bool>());
  EXPECT_EQ(ext.report["notes"][0], "F and G are externally distinct");

  const Result bad = invoke({"holds", fixture("sets.json"), "--formula", "forall x:A. x = "});
  EXPECT_EQ(bad.code, kExitMalformed);
  EXPECT_EQ(bad.report["error"]["code"], "SyntaxError");
  EXPECT_LE(bad.report["error"]["position"].get<std::size_t>(), 16u);

  const Result unbound = invoke({"holds", fixture("sets.json"), "--formula", "exists x:A. true"});
  EXPECT_EQ(unbound.code, kExitMalformed);
}

TEST(Cli, TuringMachines) {
  const Result succ = invoke({"tm", "run", fixture("tm_successor.json"), "--input", "111", "--input", "1"});
  EXPECT_EQ(succ.code, kExitOk);
  EXPECT_EQ(succ.report["pairs"], json::parse(R"([["1", "11"], ["111", "1111"]])"));
  EXPECT_FALSE(succ.report["budget_exhausted"].get<bool>());

  const Result branch = invoke({"tm", "closure", fixture("tm_branch.json"), "--input", "1"});
  EXPECT_EQ(branch.report["count"], 3);

  const Result halt = invoke({"tm", "closure", fixture("tm_halt.json"), "--input", "01"});
  EXPECT_EQ(halt.report["count"], 1);
  EXPECT_EQ(halt.report["configurations"][0]["cells"], json::parse(R"(["0", "1"])"));

  const Result tight = invoke({"tm", "closure", fixture("tm_successor.json"), "--input", "11", "--budget", "2"});
  EXPECT_EQ(tight.code, kExitOk);
  EXPECT_TRUE(tight.report["budget_exhausted"].get<bool>());
}

TEST(Cli, ReportsAreDeterministic) {
  const std::vector<std::string> args{"finiteness", fixture("trunc_2.json"), "--object", "C", "--notion", "lp:1"};
  EXPECT_EQ(invoke(args).raw, invoke(args).raw);
  auto timed = args;
  timed.insert(timed.begin(), "--timings");
  EXPECT_TRUE(invoke(timed).report.contains("timings_ms"));
}

TEST(Cli, SuiteDeterminismAndInjection) {
  const std::vector<std::string> args{"suite", "--seed", "7", "--random", "5", "--fixtures", kFixtures.string()};
  const Result a = invoke(args);
  EXPECT_EQ(a.code, kExitOk) << a.summary;
  EXPECT_TRUE(a.report["passed"].get<bool>());
  EXPECT_EQ(a.raw, invoke(args).raw);

  auto broken = args;
  broken.insert(broken.end(), {"--inject", "heyting"});
  const Result b = invoke(broken);
  EXPECT_EQ(b.code, kExitFailure);
  EXPECT_EQ(b.report["failure"]["property"], "heyting");
}

TEST(Cli, FixturesSubcommandWritesCorpus) {
  const auto dir = std::filesystem::temp_directory_path() / "toposbench_fixtures_out";
  std::filesystem::remove_all(dir);
  const Result r = invoke({"fixtures", "--out", dir.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(std::filesystem::exists(dir / "automaton.json"));
  EXPECT_EQ(invoke({"validate", (dir / "chain_3.json").string()}).code, kExitOk);
}

}  // namespace
}  // namespace toposbench::cli
