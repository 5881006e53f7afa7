#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "toposbench/enumerate.hpp"
#include "toposbench/error.hpp"
#include "toposbench/finiteness/k_properties.hpp"
#include "toposbench/finiteness/notions.hpp"
#include "toposbench/limits.hpp"
#include "toposbench/machines/automaton.hpp"
#include "toposbench/omega.hpp"

namespace toposbench::finiteness {
namespace {

std::vector<CategoryRef> small_bases() {
  std::vector<CategoryRef> out{trivial_category(), arrow_category()};
  for (const auto& m : enumerate_monoids(2)) out.push_back(monoid_to_category(m));
  return out;
}

PresheafRef regular(const FinMonoid& m) { return representable(monoid_to_category(m), 0); }

TEST(Notion, ParseAndName) {
  EXPECT_EQ(FinitenessNotion::parse("dedekind").tag, FinitenessNotion::Tag::Dedekind);
  EXPECT_EQ(FinitenessNotion::parse("lp:3").p, 3u);
  EXPECT_EQ(FinitenessNotion::parse("lp:3").name(), "lp:3");
  EXPECT_EQ(FinitenessNotion::parse("kuratowski", Mode::External).mode, Mode::External);
  EXPECT_THROW(FinitenessNotion::parse("lp:0"), Error);
  EXPECT_THROW(FinitenessNotion::parse("peano"), Error);
}

TEST(Dedekind, FiniteSetsInBothModes) {
  for (const auto& a : oracle::presheaves(trivial_category(), 3)) {
    EXPECT_TRUE(dedekind(a, Mode::Internal).verdict);
    EXPECT_TRUE(dedekind(a, Mode::External).verdict);
  }
}

TEST(Dedekind, OmegaIsInternallyFiniteOverSmallBases) {
  for (const auto& base : small_bases()) {
    const auto omega = OmegaStructure::build(base);
    const auto r = dedekind(omega->object(), Mode::Internal);
    EXPECT_TRUE(r.verdict);
    ASSERT_TRUE(r.truth);
    EXPECT_TRUE(r.truth->holds);
  }
}

TEST(Dedekind, ExternalCountsInjectiveEndomaps) {
  for (const auto& a : oracle::presheaves(arrow_category(), 2)) {
    std::size_t injective = 0;
    for (const auto& m : oracle::nat_trans(*a, *a)) injective += oracle::injective(m);
    const auto r = dedekind(a, Mode::External);
    EXPECT_EQ(r.monos, injective);
    EXPECT_TRUE(r.verdict);
    EXPECT_FALSE(r.witness);
  }
}

TEST(Dedekind, TruncatedFreeActionHasOnlyTheIdentity) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto c = machines::truncated_free_action(n);
    const auto monos = enumerate_nat_trans(c, c, NatFilter::Mono);
    ASSERT_EQ(monos.size(), 1u) << n;
    EXPECT_EQ(monos[0], identity(c));
    EXPECT_TRUE(dedekind(c, Mode::External).verdict);
  }
}

TEST(Kuratowski, ZeroAndOneAreFinite) {
  for (const auto& base : small_bases()) {
    EXPECT_TRUE(kuratowski(initial(base)).verdict);
    EXPECT_TRUE(kuratowski(terminal(base)).verdict);
  }
}

TEST(Kuratowski, FiniteSetsAreFinite) {
  for (const auto& a : oracle::presheaves(trivial_category(), 4)) EXPECT_TRUE(kuratowski(a).verdict);
}

TEST(Kuratowski, SubterminalOverArrowIsNotFinite) {
  const CategoryRef base = arrow_category();
  const Subfunctor v(terminal(base), {{false}, {true}});
  const auto r = kuratowski(v.as_presheaf());
  EXPECT_FALSE(r.verdict);
  ASSERT_EQ(r.failing_stages.size(), 1u);
  EXPECT_EQ(r.failing_stages[0], ObjectId{0});
}

// Property: closure and the direct sentence agree wherever the sentence is
// small enough to evaluate.
TEST(Kuratowski, ClosureMatchesDirectSentence) {
  for (const auto& base : small_bases()) {
    for (const auto& a : oracle::presheaves(base, 2)) {
      if (a->total_size() > 2) continue;
      EXPECT_EQ(kuratowski(a).verdict, kuratowski_direct(a).holds);
    }
  }
}

TEST(Kuratowski, WitnessSearchOverArrowCategory) {
  const auto w = find_k_witness(arrow_category(), 2);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->w->sizes(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(w->v.size(0), 0u);
  EXPECT_EQ(w->v.size(1), 1u);
  EXPECT_TRUE(kuratowski(w->w).verdict);
  EXPECT_FALSE(kuratowski(w->v.as_presheaf()).verdict);
  EXPECT_FALSE(find_k_witness(trivial_category(), 3));
}

TEST(Squire, ChainMonoidSeparatesLevels) {
  // The regular action of ({1..p}, max) is L_q-finite exactly when q >= p.
  for (std::size_t p = 2; p <= 4; ++p) {
    const auto a = regular(machines::chain_monoid(p));
    for (std::size_t q = 1; q <= p; ++q) EXPECT_EQ(squire_lp(a, q).verdict, q >= p) << p << " " << q;
  }
}

TEST(Squire, SmallSetsAreFinite) {
  for (const auto& a : oracle::presheaves(trivial_category(), 3)) {
    for (std::size_t p = 1; p <= 3; ++p) EXPECT_TRUE(squire_lp(a, p).verdict);
  }
}

// Property: L_q-finite implies L_p-finite for q <= p.
TEST(Squire, Monotone) {
  std::mt19937_64 rng(9);
  for (const auto& base : small_bases()) {
    const auto objects = oracle::presheaves(base, 2);
    for (int trial = 0; trial < 6; ++trial) {
      const auto& a = objects[rng() % objects.size()];
      bool previous = false;
      for (std::size_t p = 1; p <= 3; ++p) {
        const bool now = squire_lp(a, p).verdict;
        EXPECT_TRUE(!previous || now);
        previous = now;
      }
    }
  }
}

TEST(Squire, VariantsAreReportedInOrder) {
  const auto a = regular(machines::chain_monoid(2));
  const auto v = squire_variants(a, 2);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[0].scope, SquireScope::Global);
  EXPECT_EQ(v[0].satisfaction, SquireSatisfaction::Classical);
  EXPECT_EQ(v[2].scope, SquireScope::StageWise);
  EXPECT_TRUE(v[2].verdict);
  EXPECT_EQ(phi_p_formula(2, false),
            "exists x1:A. exists x2:A. (forall y:A. (y in S => (y = x1 \\/ y = x2)))");
}

TEST(KProperties, SuitePassesOnSample) {
  std::vector<PresheafRef> sample;
  const auto arrow = oracle::presheaves(arrow_category(), 2);
  for (std::size_t i = 0; i < arrow.size(); i += 2) sample.push_back(arrow[i]);
  for (const auto& a : oracle::presheaves(trivial_category(), 2)) sample.push_back(a);
  const auto report = k_properties_suite(sample);
  EXPECT_TRUE(report.passed()) << (report.first_failure() ? report.first_failure()->detail : "");
  EXPECT_FALSE(report.checks.empty());
}

}  // namespace
}  // namespace toposbench::finiteness
