#include <gtest/gtest.h>

#include <random>

#include "cli/fixtures.hpp"
#include "support/oracles.hpp"
#include "toposbench/error.hpp"
#include "toposbench/limits.hpp"
#include "toposbench/machines/automaton.hpp"
#include "toposbench/machines/tm.hpp"

namespace toposbench::machines {
namespace {

TEST(TM, SuccessorAppendsOne) {
  const TMSpec tm = cli::tm_successor();
  EXPECT_TRUE(is_deterministic(tm));
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto rel = tm_computed_relation(tm, {std::string(n, '1')}, 10000);
    ASSERT_EQ(rel.pairs.size(), 1u);
    EXPECT_EQ(rel.pairs.begin()->second, std::string(n + 1, '1'));
    EXPECT_TRUE(rel.exhausted_inputs.empty());
  }
}

TEST(TM, HaltingMachineComputesIdentity) {
  const TMSpec tm = cli::tm_halt();
  const auto rel = tm_computed_relation(tm, {"", "0", "101"}, 10);
  const std::set<std::pair<std::string, std::string>> expected{{"", ""}, {"0", "0"}, {"101", "101"}};
  EXPECT_EQ(rel.pairs, expected);
}

TEST(TM, BranchingMachineHasTwoOutputs) {
  const TMSpec tm = cli::tm_branch();
  EXPECT_FALSE(is_deterministic(tm));
  const auto rel = tm_computed_relation(tm, {"1"}, 100);
  const std::set<std::pair<std::string, std::string>> expected{{"1", "a"}, {"1", "b"}};
  EXPECT_EQ(rel.pairs, expected);
}

TEST(TM, StepWritesThenMoves) {
  const TMSpec tm = cli::tm_successor();
  const Configuration start = initial_configuration(tm, "1");
  const auto next = tm_step(tm, start);
  ASSERT_EQ(next.size(), 1u);
  EXPECT_EQ(next.begin()->head, 1);
  EXPECT_EQ(tape_word(tm, *next.begin()), "1");
}

TEST(TM, BudgetIsFlagged) {
  TMSpec tm;
  tm.states = {"q"};
  tm.alphabet = {" "};
  tm.q0 = tm.qf = "q";
  tm.delta[{"q", " "}] = {{"q", " ", Move::R}};
  const auto closure = tm_closure(tm, {initial_configuration(tm, "")}, 50);
  EXPECT_TRUE(closure.budget_exhausted);
  EXPECT_EQ(closure.configs.size(), 50u);
  const auto rel = tm_computed_relation(tm, {""}, 50);
  EXPECT_EQ(rel.exhausted_inputs, std::vector<std::string>{""});
}

TEST(TM, RejectsBadInputsAndSpecs) {
  const TMSpec tm = cli::tm_successor();
  EXPECT_THROW(initial_configuration(tm, "12"), Error);
  EXPECT_THROW(initial_configuration(tm, " "), Error);
  TMSpec bad = tm;
  bad.qf = "nowhere";
  EXPECT_THROW(validate_tm(bad), Error);
  bad = tm;
  bad.delta[{"q0", "1"}].push_back({"q0", "7", Move::L});
  EXPECT_THROW(validate_tm(bad), Error);
  bad = tm;
  bad.alphabet.push_back("11");
  EXPECT_THROW(validate_tm(bad), Error);
}

// Property: the fixpoint closure equals breadth-first reachability; under
// an exhausted budget it holds whole layers and nothing unreachable.
TEST(TM, ClosureMatchesBreadthFirstSearch) {
  std::mt19937_64 rng(2024);
  const std::size_t budget = 10000;
  for (int trial = 0; trial < 100; ++trial) {
    const TMSpec tm = oracle::random_machine(rng);
    std::string word;
    for (std::size_t i = rng() % 4; i > 0 && tm.alphabet.size() > 1; --i) {
      word += tm.alphabet[1 + rng() % (tm.alphabet.size() - 1)];
    }
    const Configuration start = initial_configuration(tm, word);
    bool exhausted = false;
    const auto dist = oracle::bfs_distances(tm, start, budget, exhausted);
    const auto closure = tm_closure(tm, {start}, budget);
    EXPECT_EQ(closure.budget_exhausted, exhausted) << trial;
    if (!exhausted) {
      ASSERT_EQ(closure.configs.size(), dist.size()) << trial;
      for (const auto& [c, d] : dist) EXPECT_TRUE(closure.configs.count(c));
      continue;
    }
    std::size_t deepest = 0;
    for (const auto& c : closure.configs) {
      ASSERT_TRUE(dist.count(c)) << trial;
      deepest = std::max(deepest, dist.at(c));
    }
    for (const auto& [c, d] : dist) {
      if (d < deepest) EXPECT_TRUE(closure.configs.count(c)) << trial;
    }
  }
}

StagewiseTM automaton_states_machine() {
  const MSet m = automaton_to_mset(four_state_automaton());
  StagewiseTM tm;
  tm.states = m.parts[0];
  tm.alphabet = terminal(m.base);
  const Elem q4 = *tm.states->find_element(0, "q4");
  tm.q0 = {q4};
  tm.qf = {q4};
  tm.blank = {0};
  tm.delta.resize(1);
  tm.fin = finiteness::FinitenessNotion::parse("dedekind", finiteness::Mode::External);
  return tm;
}

TEST(StagewiseTM, AutomatonStateObjectShowsMismatch) {
  const StagewiseTM tm = automaton_states_machine();
  const auto report = tm_internal_demo(tm, 1000);
  EXPECT_TRUE(report.states_finite);
  EXPECT_TRUE(report.closures_natural);
  EXPECT_EQ(report.state_global_elements, 1u);
  EXPECT_EQ(report.state_proper_subobjects, 2u);
  EXPECT_TRUE(report.internal_external_mismatch);
  ASSERT_EQ(report.closures.size(), 1u);
  EXPECT_EQ(report.closures[0].configs.size(), 1u);
}

TEST(StagewiseTM, RejectsNonEquivariantDelta) {
  StagewiseTM tm = automaton_states_machine();
  const Elem q1 = *tm.states->find_element(0, "q1");
  tm.delta[0][{q1, 0}] = {{q1, 0, Move::R}};
  try {
    tm_internal_demo(tm, 1000);
    FAIL() << "accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EquivarianceViolation);
  }
}

TEST(StagewiseTM, RejectsNonGlobalStart) {
  StagewiseTM tm = automaton_states_machine();
  tm.q0 = {*tm.states->find_element(0, "q1")};
  EXPECT_THROW(tm_internal_demo(tm, 1000), Error);
}

}  // namespace
}  // namespace toposbench::machines
