#pragma once

#include <span>
#include <vector>

#include "toposbench/presheaf.hpp"

namespace toposbench {

PresheafRef terminal(const CategoryRef& base);
PresheafRef initial(const CategoryRef& base);

NatTrans to_terminal(const PresheafRef& x);
NatTrans from_initial(const PresheafRef& x);

// Stage-wise cartesian product; elements are ordered lexicographically
// (mixed radix, first factor most significant). The empty product is terminal.
struct ProductCone {
  PresheafRef object;
  std::vector<PresheafRef> factors;
  std::vector<NatTrans> projections;

  Elem encode(ObjectId c, std::span<const Elem> coordinates) const;
  std::vector<Elem> decode(ObjectId c, Elem x) const;
};

ProductCone product(const CategoryRef& base, const std::vector<PresheafRef>& factors);
ProductCone product(const PresheafRef& a, const PresheafRef& b);
// The mediating map ⟨legs⟩ : X → product.
NatTrans pairing(const ProductCone& cone, const std::vector<NatTrans>& legs);
// f × g between two binary products.
NatTrans product_map(const ProductCone& from, const ProductCone& to,
                     const std::vector<NatTrans>& maps);

struct CoproductCocone {
  PresheafRef object;
  std::vector<PresheafRef> summands;
  std::vector<NatTrans> injections;
};

CoproductCocone coproduct(const PresheafRef& a, const PresheafRef& b);
// The mediating map [legs] : coproduct → Y.
NatTrans copairing(const CoproductCocone& cocone, const std::vector<NatTrans>& legs);

struct EqualizerCone {
  PresheafRef object;
  NatTrans inclusion;
};

EqualizerCone equalizer(const NatTrans& f, const NatTrans& g);

struct PullbackCone {
  PresheafRef object;
  NatTrans first;   // to the domain of f
  NatTrans second;  // to the domain of g
};

PullbackCone pullback(const NatTrans& f, const NatTrans& g);

}  // namespace toposbench
