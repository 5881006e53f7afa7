#include <gtest/gtest.h>

#include "toposbench/error.hpp"
#include "toposbench/limits.hpp"
#include "toposbench/presheaf.hpp"

namespace toposbench {
namespace {

using Carriers = std::vector<std::vector<std::string>>;
using Actions = std::vector<std::vector<Elem>>;

ErrorCode code_of(auto&& build) {
  try {
    build();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted";
  return ErrorCode::MalformedInput;
}

TEST(Presheaf, ArrowCategoryObject) {
  const auto p = make_presheaf(arrow_category(), Carriers{{"x", "y"}, {"z"}}, Actions{{0, 1}, {0}, {0, 0}});
  EXPECT_EQ(p->total_size(), 3u);
  EXPECT_EQ(p->element_name(1, 0), "z");
  EXPECT_EQ(p->find_element(0, "y"), Elem{1});
  EXPECT_FALSE(p->find_element(0, "z"));
}

TEST(Presheaf, RejectsNonIdentityAction) {
  EXPECT_EQ(code_of([] {
              make_presheaf(arrow_category(), Carriers{{"x", "y"}, {"z"}}, Actions{{1, 0}, {0}, {0, 0}});
            }),
            ErrorCode::FunctorViolation);
}

TEST(Presheaf, RejectsActionLeavingCarrier) {
  EXPECT_THROW(make_presheaf(arrow_category(), Carriers{{"x"}, {"z"}}, Actions{{0}, {0}, {3}}), Error);
}

TEST(Presheaf, RejectsCompositionViolation) {
  // Z/2 acting on two points must square to the identity; a constant map does not.
  const CategoryRef base = monoid_to_category(FinMonoid({"1", "s"}, 0, {0, 1, 1, 0}));
  EXPECT_EQ(code_of([&] { make_presheaf(base, Carriers{{"p", "q"}}, Actions{{0, 1}, {0, 0}}); }),
            ErrorCode::FunctorViolation);
  EXPECT_NO_THROW(make_presheaf(base, Carriers{{"p", "q"}}, Actions{{0, 1}, {1, 0}}));
}

TEST(Presheaf, RepresentablesOfArrowCategory) {
  const CategoryRef base = arrow_category();
  const auto y0 = representable(base, 0);
  const auto y1 = representable(base, 1);
  EXPECT_EQ(y0->sizes(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(y1->sizes(), (std::vector<std::size_t>{0, 1}));
}

TEST(NatTrans, RejectsBrokenSquare) {
  const CategoryRef base = arrow_category();
  const auto a = make_presheaf(base, Carriers{{"x"}, {"y1", "y2"}}, Actions{{0}, {0, 1}, {0}});
  const auto b = make_presheaf(base, Carriers{{"x"}, {"y1", "y2"}}, Actions{{0}, {0, 1}, {0}});
  try {
    NatTrans(a, b, {{0}, {1, 0}});
    FAIL() << "accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NaturalityViolation);
    EXPECT_NE(std::string(e.what()).find("u"), std::string::npos);
  }
  EXPECT_NO_THROW(NatTrans(a, b, {{0}, {0, 1}}));
}

TEST(NatTrans, RejectsDifferentBases) {
  const auto a = terminal(arrow_category());
  const auto b = terminal(trivial_category());
  EXPECT_EQ(code_of([&] { NatTrans(a, b, {{0}, {0}}); }), ErrorCode::BaseMismatch);
}

TEST(NatTrans, MonoEpiIso) {
  const CategoryRef base = trivial_category();
  const auto two = make_presheaf(base, Carriers{{"a", "b"}}, Actions{{0, 1}});
  const auto one = terminal(base);
  const NatTrans swap(two, two, {{1, 0}});
  const NatTrans bang = to_terminal(two);
  EXPECT_TRUE(swap.is_iso());
  EXPECT_TRUE(bang.is_epi());
  EXPECT_FALSE(bang.is_mono());
  EXPECT_EQ(compose(swap, swap), identity(two));
}

TEST(Subfunctor, GeneratedClosesUnderActions) {
  const CategoryRef base = arrow_category();
  const auto a = make_presheaf(base, Carriers{{"x", "y"}, {"z", "w"}}, Actions{{0, 1}, {0, 1}, {1, 1}});
  const Subfunctor s = generated_subfunctor(a, {{true, false}, {false, false}});
  EXPECT_EQ(s.elements(0), (std::vector<Elem>{0}));
  EXPECT_EQ(s.elements(1), (std::vector<Elem>{1}));
  EXPECT_THROW(Subfunctor(a, {{true, false}, {false, false}}), Error);
}

TEST(Subfunctor, ImageOfMap) {
  const CategoryRef base = trivial_category();
  const auto three = make_presheaf(base, Carriers{{"a", "b", "c"}}, Actions{{0, 1, 2}});
  const NatTrans f(three, three, {{0, 0, 2}});
  EXPECT_EQ(image(f).elements(0), (std::vector<Elem>{0, 2}));
}

TEST(Subfunctor, AsPresheafKeepsNames) {
  const auto three = make_presheaf(trivial_category(), Carriers{{"a", "b", "c"}}, Actions{{0, 1, 2}});
  const Subfunctor s(three, {{false, true, true}});
  const auto p = s.as_presheaf();
  EXPECT_EQ(p->element_name(0, 0), "b");
  EXPECT_TRUE(s.inclusion().is_mono());
}

}  // namespace
}  // namespace toposbench
