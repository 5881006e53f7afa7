#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "toposbench/certify.hpp"
#include "toposbench/enumerate.hpp"
#include "toposbench/limits.hpp"

namespace toposbench {
namespace {

std::vector<PresheafRef> tests_for(const CategoryRef& base) {
  std::vector<PresheafRef> out{terminal(base), initial(base)};
  for (ObjectId c = 0; c < base->object_count(); ++c) out.push_back(representable(base, c));
  return out;
}

std::vector<CategoryRef> bases() {
  std::vector<CategoryRef> out{trivial_category(), arrow_category()};
  for (const auto& m : enumerate_monoids(3)) out.push_back(monoid_to_category(m));
  return out;
}

TEST(Limits, TerminalAndInitialAreUniversal) {
  for (const auto& base : bases()) {
    const auto sample = oracle::presheaves(base, 2);
    EXPECT_FALSE(certify_terminal(base, sample));
    EXPECT_FALSE(certify_initial(base, sample));
  }
}

// Property: stage sizes of limits match set-level formulas, and every cone
// is certified universal against the representables.
TEST(Limits, RandomPairsHaveUniversalCones) {
  std::mt19937_64 rng(3);
  for (const auto& base : bases()) {
    const auto objects = oracle::presheaves(base, 2);
    const auto tests = tests_for(base);
    for (int trial = 0; trial < 5; ++trial) {
      const auto& a = objects[rng() % objects.size()];
      const auto& b = objects[rng() % objects.size()];
      const ProductCone p = product(a, b);
      const CoproductCocone s = coproduct(a, b);
      for (ObjectId c = 0; c < base->object_count(); ++c) {
        EXPECT_EQ(p.object->size(c), a->size(c) * b->size(c));
        EXPECT_EQ(s.object->size(c), a->size(c) + b->size(c));
      }
      EXPECT_FALSE(certify_product(p, tests));
      EXPECT_FALSE(certify_coproduct(s, tests));

      const auto maps = oracle::nat_trans(*a, *b);
      if (maps.empty()) continue;
      const NatTrans f(a, b, maps[rng() % maps.size()]);
      const NatTrans g(a, b, maps[rng() % maps.size()]);
      const EqualizerCone e = equalizer(f, g);
      const PullbackCone q = pullback(f, g);
      for (ObjectId c = 0; c < base->object_count(); ++c) {
        std::size_t agree = 0, pairs = 0;
        for (Elem x = 0; x < a->size(c); ++x) {
          agree += f(c, x) == g(c, x);
          for (Elem y = 0; y < a->size(c); ++y) pairs += f(c, x) == g(c, y);
        }
        EXPECT_EQ(e.object->size(c), agree);
        EXPECT_EQ(q.object->size(c), pairs);
      }
      EXPECT_FALSE(certify_equalizer(f, g, e, tests));
      EXPECT_FALSE(certify_pullback(f, g, q, tests));
    }
  }
}

TEST(Limits, EqualizerOfDistinctMapsRejectsWrongCone) {
  const CategoryRef base = trivial_category();
  const auto two = make_presheaf(base, std::vector<std::vector<std::string>>{{"a", "b"}},
                                 std::vector<std::vector<Elem>>{{0, 1}});
  const NatTrans id = identity(two);
  const NatTrans swap(two, two, {{1, 0}});
  const auto cert = certify_equalizer(id, swap, equalizer(id, id), tests_for(base));
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->property, "equalizer");
}

TEST(Limits, PairingAndCopairingCommute) {
  const CategoryRef base = arrow_category();
  const auto objects = oracle::presheaves(base, 2);
  const auto& x = objects[5];
  const auto& a = objects[7];
  const auto& b = objects[9];
  const ProductCone p = product(a, b);
  for (const auto& f : enumerate_nat_trans(x, a)) {
    for (const auto& g : enumerate_nat_trans(x, b)) {
      const NatTrans h = pairing(p, {f, g});
      EXPECT_EQ(compose(p.projections[0], h), f);
      EXPECT_EQ(compose(p.projections[1], h), g);
    }
  }
  const CoproductCocone s = coproduct(a, b);
  for (const auto& f : enumerate_nat_trans(a, x)) {
    for (const auto& g : enumerate_nat_trans(b, x)) {
      const NatTrans h = copairing(s, {f, g});
      EXPECT_EQ(compose(h, s.injections[0]), f);
      EXPECT_EQ(compose(h, s.injections[1]), g);
    }
  }
}

TEST(Limits, NaryProductEncoding) {
  const CategoryRef base = trivial_category();
  auto sized = [&](std::size_t n) {
    std::vector<Elem> id(n);
    for (Elem i = 0; i < n; ++i) id[i] = i;
    return make_presheaf(base, std::vector<std::size_t>{n}, std::vector<std::vector<Elem>>{id},
                         [](ObjectId, Elem x) { return std::to_string(x); });
  };
  const ProductCone p = product(base, {sized(2), sized(3), sized(2)});
  EXPECT_EQ(p.object->size(0), 12u);
  const std::vector<Elem> coords{1, 2, 0};
  const Elem e = p.encode(0, coords);
  EXPECT_EQ(e, Elem{1 * 6 + 2 * 2 + 0});
  EXPECT_EQ(p.decode(0, e), coords);
  EXPECT_EQ(product(base, {}).object->size(0), 1u);
}

}  // namespace
}  // namespace toposbench
