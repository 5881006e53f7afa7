#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toposbench {

using ObjectId = std::uint32_t;
using ArrowId = std::uint32_t;

inline constexpr ArrowId kNoArrow = static_cast<ArrowId>(-1);

struct ArrowSpec {
  std::string name;
  std::string dom;
  std::string cod;
};

// Unvalidated tables as read from a model file. compose maps (g, f) to g∘f.
struct RawCategory {
  std::vector<std::string> objects;
  std::vector<ArrowSpec> arrows;
  std::map<std::string, std::string> identities;
  std::map<std::pair<std::string, std::string>, std::string> compose;
};

class FinCategory {
 public:
  struct Arrow {
    std::string name;
    ObjectId dom;
    ObjectId cod;
  };

  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  const std::string& object_name(ObjectId c) const { return objects_[c]; }
  const Arrow& arrow(ArrowId f) const { return arrows_[f]; }
  ObjectId dom(ArrowId f) const { return arrows_[f].dom; }
  ObjectId cod(ArrowId f) const { return arrows_[f].cod; }
  ArrowId identity(ObjectId c) const { return identities_[c]; }
  bool is_identity(ArrowId f) const { return identities_[arrows_[f].dom] == f; }

  // g∘f; kNoArrow unless dom(g) == cod(f).
  ArrowId compose(ArrowId g, ArrowId f) const {
    return table_[static_cast<std::size_t>(g) * arrows_.size() + f];
  }

  // Arrows with the given domain, in declaration order.
  const std::vector<ArrowId>& arrows_from(ObjectId c) const { return out_[c]; }
  const std::vector<ArrowId>& arrows_between(ObjectId c, ObjectId d) const {
    return hom_[static_cast<std::size_t>(c) * objects_.size() + d];
  }
  // Position of f within arrows_between(dom f, cod f).
  std::size_t hom_rank(ArrowId f) const { return hom_rank_[f]; }

  std::optional<ObjectId> find_object(const std::string& name) const;
  std::optional<ArrowId> find_arrow(const std::string& name) const;

  RawCategory to_raw() const;

  bool operator==(const FinCategory& other) const;

 private:
  friend FinCategory validate_category(const RawCategory& raw);
  FinCategory() = default;
  void index();

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<ArrowId> identities_;
  std::vector<ArrowId> table_;
  std::vector<std::vector<ArrowId>> out_;
  std::vector<std::vector<ArrowId>> hom_;
  std::vector<std::size_t> hom_rank_;
};

using CategoryRef = std::shared_ptr<const FinCategory>;

// Certifies totality on composable pairs, identity laws and associativity.
// Identities omitted from raw.identities are inferred from the table.
FinCategory validate_category(const RawCategory& raw);

bool same_base(const CategoryRef& a, const CategoryRef& b);

struct RawMonoid {
  std::vector<std::string> elements;
  std::string unit;
  // (m, n) -> m⋆n; products with the unit may be omitted.
  std::map<std::pair<std::string, std::string>, std::string> table;
};

class FinMonoid {
 public:
  FinMonoid(std::vector<std::string> elements, std::size_t unit,
            std::vector<std::size_t> table);

  std::size_t size() const { return elements_.size(); }
  std::size_t unit() const { return unit_; }
  const std::string& name(std::size_t m) const { return elements_[m]; }
  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t multiply(std::size_t m, std::size_t n) const {
    return table_[m * elements_.size() + n];
  }
  std::optional<std::size_t> find(const std::string& name) const;

  RawMonoid to_raw() const;

  bool operator==(const FinMonoid& other) const = default;

 private:
  std::vector<std::string> elements_;
  std::size_t unit_;
  std::vector<std::size_t> table_;
};

FinMonoid validate_monoid(const RawMonoid& raw);

// One object "*"; arrows are the monoid elements with g∘f := f⋆g, so that a
// presheaf stores x ↦ A(x,m) and action(m⋆n) = action(n)∘action(m).
CategoryRef monoid_to_category(const FinMonoid& m);

CategoryRef trivial_category();
// Objects 0, 1 and arrows id0, id1, u: 0 → 1.
CategoryRef arrow_category();

// One representative per isomorphism class of monoids of the given order.
std::vector<FinMonoid> enumerate_monoids(std::size_t order);

}  // namespace toposbench
