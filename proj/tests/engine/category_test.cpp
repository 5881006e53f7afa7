#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "toposbench/category.hpp"
#include "toposbench/error.hpp"

namespace toposbench {
namespace {

ErrorCode code_of(const RawCategory& raw) {
  try {
    validate_category(raw);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "category was accepted";
  return ErrorCode::MalformedInput;
}

RawCategory two_arrows() {
  RawCategory raw;
  raw.objects = {"a", "b"};
  raw.arrows = {{"ida", "a", "a"}, {"idb", "b", "b"}, {"f", "a", "b"}, {"g", "a", "b"}};
  raw.identities = {{"a", "ida"}, {"b", "idb"}};
  for (auto [g, f, h] : {std::tuple{"ida", "ida", "ida"}, {"idb", "idb", "idb"}, {"f", "ida", "f"},
                         {"g", "ida", "g"}, {"idb", "f", "f"}, {"idb", "g", "g"}}) {
    raw.compose[{g, f}] = h;
  }
  return raw;
}

TEST(Category, ValidatesParallelArrows) {
  const FinCategory cat = validate_category(two_arrows());
  EXPECT_EQ(cat.object_count(), 2u);
  EXPECT_EQ(cat.arrow_count(), 4u);
  EXPECT_EQ(cat.arrows_between(0, 1).size(), 2u);
  EXPECT_EQ(cat.compose(*cat.find_arrow("idb"), *cat.find_arrow("g")), *cat.find_arrow("g"));
  EXPECT_EQ(cat.compose(*cat.find_arrow("f"), *cat.find_arrow("g")), kNoArrow);
}

TEST(Category, InfersOmittedIdentities) {
  RawCategory raw = two_arrows();
  raw.identities.clear();
  const FinCategory cat = validate_category(raw);
  EXPECT_EQ(cat.arrow(cat.identity(0)).name, "ida");
  EXPECT_EQ(cat.arrow(cat.identity(1)).name, "idb");
}

TEST(Category, RejectsMissingComposite) {
  RawCategory raw;
  raw.objects = {"a", "b", "c"};
  raw.arrows = {{"ida", "a", "a"}, {"idb", "b", "b"}, {"idc", "c", "c"}, {"f", "a", "b"}, {"g", "b", "c"}};
  raw.identities = {{"a", "ida"}, {"b", "idb"}, {"c", "idc"}};
  for (auto [g, f, h] : {std::tuple{"ida", "ida", "ida"}, {"idb", "idb", "idb"}, {"idc", "idc", "idc"},
                         {"f", "ida", "f"}, {"idb", "f", "f"}, {"g", "idb", "g"}, {"idc", "g", "g"}}) {
    raw.compose[{g, f}] = h;
  }
  EXPECT_EQ(code_of(raw), ErrorCode::MissingComposite);
}

TEST(Category, RejectsIdentityViolation) {
  RawCategory raw = two_arrows();
  raw.compose[{"idb", "g"}] = "f";
  EXPECT_EQ(code_of(raw), ErrorCode::IdentityViolation);
}

TEST(Category, RejectsNonAssociativeTable) {
  // One object, arrows 1, s, t with s∘s = t, t∘t = s, s∘t = t∘s = s.
  RawCategory raw;
  raw.objects = {"*"};
  raw.arrows = {{"1", "*", "*"}, {"s", "*", "*"}, {"t", "*", "*"}};
  raw.identities = {{"*", "1"}};
  for (const char* x : {"1", "s", "t"}) {
    raw.compose[{"1", x}] = x;
    raw.compose[{x, "1"}] = x;
  }
  raw.compose[{"s", "s"}] = "t";
  raw.compose[{"t", "t"}] = "s";
  raw.compose[{"s", "t"}] = "s";
  raw.compose[{"t", "s"}] = "s";
  EXPECT_EQ(code_of(raw), ErrorCode::AssociativityViolation);
}

TEST(Category, RejectsUnknownObject) {
  RawCategory raw = two_arrows();
  raw.arrows.push_back({"h", "a", "c"});
  EXPECT_THROW(validate_category(raw), Error);
}

TEST(Category, ArrowCategoryShape) {
  const CategoryRef cat = arrow_category();
  EXPECT_EQ(cat->object_count(), 2u);
  EXPECT_EQ(cat->arrow_count(), 3u);
  EXPECT_EQ(cat->arrows_from(0).size(), 2u);
  EXPECT_EQ(cat->arrows_from(1).size(), 1u);
}

TEST(Monoid, CategoryReversesComposition) {
  // Right-zero semigroup with a unit: m*n = n for m, n != 1.
  RawMonoid raw;
  raw.elements = {"1", "a", "b"};
  raw.unit = "1";
  for (const char* m : {"a", "b"}) {
    for (const char* n : {"a", "b"}) raw.table[{m, n}] = n;
  }
  const FinMonoid m = validate_monoid(raw);
  const CategoryRef cat = monoid_to_category(m);
  const ArrowId a = *cat->find_arrow("a");
  const ArrowId b = *cat->find_arrow("b");
  // g∘f = f*g, so b∘a = a*b = b.
  EXPECT_EQ(cat->compose(b, a), b);
  EXPECT_EQ(cat->compose(a, b), a);
}

TEST(Monoid, RejectsNonAssociativeTable) {
  RawMonoid raw;
  raw.elements = {"1", "a", "b"};
  raw.unit = "1";
  raw.table[{"a", "a"}] = "b";
  raw.table[{"a", "b"}] = "a";
  raw.table[{"b", "a"}] = "a";
  raw.table[{"b", "b"}] = "a";
  EXPECT_THROW(validate_monoid(raw), Error);
}

TEST(Monoid, EnumerationMatchesBruteForceClassCount) {
  for (std::size_t order = 1; order <= 4; ++order) {
    EXPECT_EQ(enumerate_monoids(order).size(), oracle::monoid_count(order)) << "order " << order;
  }
}

TEST(Monoid, EnumerationMatchesKnownCounts) {
  // Monoids up to isomorphism of orders 1..4.
  const std::size_t known[] = {1, 2, 7, 35};
  for (std::size_t order = 1; order <= 4; ++order) {
    EXPECT_EQ(enumerate_monoids(order).size(), known[order - 1]);
  }
}

TEST(Monoid, EnumeratedTablesAreValid) {
  for (const auto& m : enumerate_monoids(3)) {
    EXPECT_NO_THROW(validate_monoid(m.to_raw()));
    EXPECT_EQ(validate_monoid(m.to_raw()), m);
  }
}

}  // namespace
}  // namespace toposbench
