#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "toposbench/enumerate.hpp"
#include "toposbench/limits.hpp"

namespace toposbench {
namespace {

std::vector<CategoryRef> bases() {
  std::vector<CategoryRef> out{trivial_category(), arrow_category()};
  for (const auto& m : enumerate_monoids(2)) out.push_back(monoid_to_category(m));
  for (const auto& m : enumerate_monoids(3)) out.push_back(monoid_to_category(m));
  return out;
}

TEST(EnumeratePresheaves, MatchesBruteForceCounts) {
  for (const auto& base : bases()) {
    EXPECT_EQ(enumerate_presheaves(base, 2).size(), oracle::presheaves(base, 2).size());
  }
  EXPECT_EQ(enumerate_presheaves(arrow_category(), 3).size(),
            oracle::presheaves(arrow_category(), 3).size());
}

TEST(EnumeratePresheaves, ArrowCategoryCountIsSumOfFunctionCounts) {
  // Objects of Sets^{0->1}: one per function [a] -> [b].
  std::size_t expected = 0;
  for (std::size_t a = 0; a <= 2; ++a) {
    for (std::size_t b = 0; b <= 2; ++b) {
      std::size_t n = 1;
      for (std::size_t i = 0; i < a; ++i) n *= b;
      expected += n;
    }
  }
  EXPECT_EQ(enumerate_presheaves(arrow_category(), 2).size(), expected);
}

// Property: nat-trans enumeration agrees with brute force, in order.
TEST(EnumerateNatTrans, MatchesBruteForceOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (const auto& base : bases()) {
    const auto objects = oracle::presheaves(base, 2);
    for (int trial = 0; trial < 6; ++trial) {
      const auto& a = objects[rng() % objects.size()];
      const auto& b = objects[rng() % objects.size()];
      const auto expected = oracle::nat_trans(*a, *b);
      const auto all = enumerate_nat_trans(a, b);
      ASSERT_EQ(all.size(), expected.size());
      for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].components(), expected[i]);
      std::size_t monos = 0;
      for (const auto& m : expected) monos += oracle::injective(m);
      EXPECT_EQ(count_nat_trans(a, b, NatFilter::Mono), monos);
    }
  }
}

TEST(EnumerateNatTrans, IsoFilterOnSets) {
  const auto three = make_presheaf(trivial_category(), std::vector<std::size_t>{3},
                                   std::vector<std::vector<Elem>>{{0, 1, 2}},
                                   [](ObjectId, Elem x) { return std::to_string(x); });
  EXPECT_EQ(count_nat_trans(three, three), 27u);
  EXPECT_EQ(count_nat_trans(three, three, NatFilter::Iso), 6u);
  EXPECT_EQ(count_nat_trans(three, three, NatFilter::Epi), 6u);
}

TEST(GlobalElements, CountEqualsNatTransFromTerminal) {
  for (const auto& base : bases()) {
    for (const auto& p : oracle::presheaves(base, 2)) {
      EXPECT_EQ(global_elements(p).size(), oracle::nat_trans(*terminal(base), *p).size());
    }
  }
}

TEST(EnumerateNatTrans, StopsWhenVisitorReturnsFalse) {
  const auto two = make_presheaf(trivial_category(), std::vector<std::size_t>{2},
                                 std::vector<std::vector<Elem>>{{0, 1}},
                                 [](ObjectId, Elem x) { return std::to_string(x); });
  int visits = 0;
  for_each_nat_trans(*two, *two, NatFilter::All, [&](std::span<const Elem>) { return ++visits < 2; });
  EXPECT_EQ(visits, 2);
}

}  // namespace
}  // namespace toposbench
