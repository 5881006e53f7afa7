#include "toposbench/limits.hpp"

#include "toposbench/error.hpp"

namespace toposbench {

PresheafRef terminal(const CategoryRef& base) {
  std::vector<std::vector<std::string>> carriers(base->object_count(), {"*"});
  std::vector<std::vector<Elem>> action(base->arrow_count(), {0});
  return make_presheaf(base, std::move(carriers), std::move(action));
}

PresheafRef initial(const CategoryRef& base) {
  std::vector<std::vector<std::string>> carriers(base->object_count());
  std::vector<std::vector<Elem>> action(base->arrow_count());
  return make_presheaf(base, std::move(carriers), std::move(action));
}

NatTrans to_terminal(const PresheafRef& x) {
  std::vector<std::vector<Elem>> components;
  for (std::size_t n : x->sizes()) components.emplace_back(n, 0);
  return NatTrans(x, terminal(x->base()), std::move(components));
}

NatTrans from_initial(const PresheafRef& x) {
  return NatTrans(initial(x->base()), x,
                  std::vector<std::vector<Elem>>(x->base()->object_count()));
}

Elem ProductCone::encode(ObjectId c, std::span<const Elem> coordinates) const {
  std::size_t code = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    code = code * factors[i]->size(c) + coordinates[i];
  }
  return static_cast<Elem>(code);
}

std::vector<Elem> ProductCone::decode(ObjectId c, Elem x) const {
  std::vector<Elem> coordinates(factors.size());
  std::size_t code = x;
  for (std::size_t i = factors.size(); i > 0; --i) {
    const std::size_t radix = factors[i - 1]->size(c);
    coordinates[i - 1] = static_cast<Elem>(code % radix);
    code /= radix;
  }
  return coordinates;
}

ProductCone product(const CategoryRef& base, const std::vector<PresheafRef>& factors) {
  for (const auto& f : factors) {
    if (!same_base(base, f->base())) {
      throw Error(ErrorCode::BaseMismatch, "product of presheaves over different bases");
    }
  }
  const FinCategory& cat = *base;
  ProductCone cone;
  cone.factors = factors;
  std::vector<std::size_t> sizes(cat.object_count(), 1);
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    for (const auto& f : factors) sizes[c] *= f->size(c);
  }
  std::vector<std::vector<Elem>> action(cat.arrow_count());
  for (ArrowId a = 0; a < cat.arrow_count(); ++a) {
    const ObjectId c = cat.dom(a);
    const ObjectId d = cat.cod(a);
    action[a].resize(sizes[c]);
    for (Elem x = 0; x < sizes[c]; ++x) {
      auto coordinates = cone.decode(c, x);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        coordinates[i] = factors[i]->act(a, coordinates[i]);
      }
      action[a][x] = cone.encode(d, coordinates);
    }
  }
  // The namer holds only the factors, never the cone itself.
  auto namer = [factors](ObjectId c, Elem x) {
    std::string name = "(";
    std::size_t code = x;
    std::vector<Elem> coordinates(factors.size());
    for (std::size_t i = factors.size(); i > 0; --i) {
      const std::size_t radix = factors[i - 1]->size(c);
      coordinates[i - 1] = static_cast<Elem>(code % radix);
      code /= radix;
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) name += ",";
      name += factors[i]->element_name(c, coordinates[i]);
    }
    return name + ")";
  };
  cone.object = make_presheaf(base, sizes, std::move(action), namer);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<std::vector<Elem>> components(cat.object_count());
    for (ObjectId c = 0; c < cat.object_count(); ++c) {
      for (Elem x = 0; x < sizes[c]; ++x) components[c].push_back(cone.decode(c, x)[i]);
    }
    cone.projections.emplace_back(cone.object, factors[i], std::move(components));
  }
  return cone;
}

ProductCone product(const PresheafRef& a, const PresheafRef& b) {
  return product(a->base(), {a, b});
}

NatTrans pairing(const ProductCone& cone, const std::vector<NatTrans>& legs) {
  if (legs.size() != cone.factors.size() || legs.empty()) {
    throw Error(ErrorCode::MalformedInput, "pairing needs one leg per factor");
  }
  const PresheafRef& source = legs.front().source();
  const FinCategory& cat = *source->base();
  std::vector<std::vector<Elem>> components(cat.object_count());
  std::vector<Elem> coordinates(legs.size());
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    for (Elem x = 0; x < source->size(c); ++x) {
      for (std::size_t i = 0; i < legs.size(); ++i) coordinates[i] = legs[i](c, x);
      components[c].push_back(cone.encode(c, coordinates));
    }
  }
  return NatTrans(source, cone.object, std::move(components));
}

NatTrans product_map(const ProductCone& from, const ProductCone& to,
                     const std::vector<NatTrans>& maps) {
  std::vector<NatTrans> legs;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    legs.push_back(compose(maps[i], from.projections[i]));
  }
  return pairing(to, legs);
}

CoproductCocone coproduct(const PresheafRef& a, const PresheafRef& b) {
  if (!same_base(a->base(), b->base())) {
    throw Error(ErrorCode::BaseMismatch, "coproduct of presheaves over different bases");
  }
  const CategoryRef& base = a->base();
  const FinCategory& cat = *base;
  std::vector<std::vector<std::string>> carriers(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    for (Elem x = 0; x < a->size(c); ++x) carriers[c].push_back("inl:" + a->element_name(c, x));
    for (Elem y = 0; y < b->size(c); ++y) carriers[c].push_back("inr:" + b->element_name(c, y));
  }
  std::vector<std::vector<Elem>> action(cat.arrow_count());
  for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
    const ObjectId c = cat.dom(f);
    const ObjectId d = cat.cod(f);
    for (Elem x = 0; x < a->size(c); ++x) action[f].push_back(a->act(f, x));
    for (Elem y = 0; y < b->size(c); ++y) {
      action[f].push_back(static_cast<Elem>(a->size(d) + b->act(f, y)));
    }
  }
  CoproductCocone cocone;
  cocone.object = make_presheaf(base, std::move(carriers), std::move(action));
  cocone.summands = {a, b};
  std::vector<std::vector<Elem>> left(cat.object_count());
  std::vector<std::vector<Elem>> right(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    for (Elem x = 0; x < a->size(c); ++x) left[c].push_back(x);
    for (Elem y = 0; y < b->size(c); ++y) right[c].push_back(static_cast<Elem>(a->size(c) + y));
  }
  cocone.injections.emplace_back(a, cocone.object, std::move(left));
  cocone.injections.emplace_back(b, cocone.object, std::move(right));
  return cocone;
}

NatTrans copairing(const CoproductCocone& cocone, const std::vector<NatTrans>& legs) {
  if (legs.size() != 2) throw Error(ErrorCode::MalformedInput, "copairing needs two legs");
  const PresheafRef& target = legs.front().target();
  const FinCategory& cat = *target->base();
  std::vector<std::vector<Elem>> components(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    for (Elem x = 0; x < cocone.summands[0]->size(c); ++x) components[c].push_back(legs[0](c, x));
    for (Elem y = 0; y < cocone.summands[1]->size(c); ++y) components[c].push_back(legs[1](c, y));
  }
  return NatTrans(cocone.object, target, std::move(components));
}

EqualizerCone equalizer(const NatTrans& f, const NatTrans& g) {
  if (!f.source()->same_structure(*g.source()) || !f.target()->same_structure(*g.target())) {
    throw Error(ErrorCode::BaseMismatch, "equalizer of non-parallel arrows");
  }
  std::vector<std::vector<bool>> part(f.components().size());
  for (ObjectId c = 0; c < part.size(); ++c) {
    for (Elem x = 0; x < f.source()->size(c); ++x) part[c].push_back(f(c, x) == g(c, x));
  }
  Subfunctor sub(f.source(), std::move(part));
  return {sub.as_presheaf(), sub.inclusion()};
}

PullbackCone pullback(const NatTrans& f, const NatTrans& g) {
  if (!f.target()->same_structure(*g.target())) {
    throw Error(ErrorCode::BaseMismatch, "pullback of arrows with different codomains");
  }
  ProductCone cone = product(f.source(), g.source());
  std::vector<std::vector<bool>> part(f.components().size());
  for (ObjectId c = 0; c < part.size(); ++c) {
    for (Elem x = 0; x < cone.object->size(c); ++x) {
      const auto coordinates = cone.decode(c, x);
      part[c].push_back(f(c, coordinates[0]) == g(c, coordinates[1]));
    }
  }
  Subfunctor sub(cone.object, std::move(part));
  const NatTrans inclusion = sub.inclusion();
  return {sub.as_presheaf(), compose(cone.projections[0], inclusion),
          compose(cone.projections[1], inclusion)};
}

}  // namespace toposbench
