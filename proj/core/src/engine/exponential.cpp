#include "toposbench/exponential.hpp"

#include "toposbench/enumerate.hpp"
#include "toposbench/error.hpp"

namespace toposbench {

std::shared_ptr<const Exponential> Exponential::build(const PresheafRef& a,
                                                      const PresheafRef& b,
                                                      const Budget& budget) {
  if (!same_base(a->base(), b->base())) {
    throw Error(ErrorCode::BaseMismatch, "exponential of presheaves over different bases");
  }
  const CategoryRef& base = a->base();
  const FinCategory& cat = *base;
  std::shared_ptr<Exponential> exp(new Exponential());
  exp->a_ = a;
  exp->b_ = b;
  const std::size_t n = cat.object_count();

  exp->offsets_.assign(n, std::vector<std::size_t>(n, 0));
  for (ObjectId c = 0; c < n; ++c) {
    std::size_t total = 0;
    for (ObjectId e = 0; e < n; ++e) {
      exp->offsets_[c][e] = total;
      total += cat.arrows_between(c, e).size() * a->size(e);
    }
    exp->tables_.emplace_back(total);
  }

  for (ObjectId c = 0; c < n; ++c) {
    const ProductCone domain = product(representable(base, c), a);
    TableIndex& index = exp->tables_[c];
    for_each_nat_trans(*domain.object, *b, NatFilter::All, [&](std::span<const Elem> flat) {
      if (index.size() >= budget.stage_elements) {
        throw Error(ErrorCode::SizeBudgetExceeded,
                    "exponential stage '" + cat.object_name(c) + "' exceeds the budget of " +
                        std::to_string(budget.stage_elements) + " elements");
      }
      index.insert(flat);
      return true;
    });
  }

  exp->gather_.resize(cat.arrow_count());
  for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
    const ObjectId c = cat.dom(f);
    const ObjectId c2 = cat.cod(f);
    auto& gather = exp->gather_[f];
    gather.resize(exp->tables_[c2].width());
    for (ObjectId e = 0; e < n; ++e) {
      for (ArrowId g : cat.arrows_between(c2, e)) {
        for (Elem x = 0; x < a->size(e); ++x) {
          gather[exp->position(c2, g, x)] = exp->position(c, cat.compose(g, f), x);
        }
      }
    }
  }

  std::vector<std::size_t> sizes(n);
  for (ObjectId c = 0; c < n; ++c) sizes[c] = exp->tables_[c].size();
  std::vector<std::vector<Elem>> action(cat.arrow_count());
  std::vector<Elem> scratch;
  for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
    const ObjectId c = cat.dom(f);
    const ObjectId c2 = cat.cod(f);
    const auto& gather = exp->gather_[f];
    scratch.resize(gather.size());
    for (Elem alpha = 0; alpha < sizes[c]; ++alpha) {
      const auto row = exp->tables_[c].row(alpha);
      for (std::size_t p = 0; p < gather.size(); ++p) scratch[p] = row[gather[p]];
      const auto found = exp->tables_[c2].find(scratch);
      if (!found) {
        throw Error(ErrorCode::FunctorViolation, "restricted family is not natural");
      }
      action[f].push_back(*found);
    }
  }

  std::weak_ptr<const Exponential> weak = exp;
  auto namer = [weak](ObjectId c, Elem alpha) {
    const auto raw = weak.lock();
    if (!raw) return "#" + std::to_string(alpha);
    const FinCategory& cat = *raw->a_->base();
    std::string name = "<";
    bool first = true;
    for (ObjectId e = 0; e < cat.object_count(); ++e) {
      for (ArrowId l : cat.arrows_between(c, e)) {
        for (Elem x = 0; x < raw->a_->size(e); ++x) {
          if (!first) name += ",";
          first = false;
          name += cat.arrow(l).name + ":" + raw->a_->element_name(e, x) + "->" +
                  raw->b_->element_name(e, raw->entry(c, alpha, l, x));
        }
      }
    }
    return name + ">";
  };
  exp->object_ = make_presheaf(base, sizes, std::move(action), namer);

  exp->ev_domain_ = product(exp->object_, a);
  std::vector<std::vector<Elem>> components(n);
  for (ObjectId c = 0; c < n; ++c) {
    const ArrowId id = cat.identity(c);
    for (Elem z = 0; z < exp->ev_domain_.object->size(c); ++z) {
      const auto pair = exp->ev_domain_.decode(c, z);
      components[c].push_back(exp->entry(c, pair[0], id, pair[1]));
    }
  }
  exp->evaluation_ =
      std::make_unique<NatTrans>(exp->ev_domain_.object, b, std::move(components));
  return exp;
}

NatTrans Exponential::transpose(const NatTrans& phi, const ProductCone& domain) const {
  const PresheafRef& x = domain.factors.at(0);
  const FinCategory& cat = *x->base();
  std::vector<std::vector<Elem>> components(cat.object_count());
  std::vector<Elem> scratch;
  Elem coordinates[2];
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    scratch.resize(tables_[c].width());
    for (Elem u = 0; u < x->size(c); ++u) {
      for (ObjectId e = 0; e < cat.object_count(); ++e) {
        for (ArrowId l : cat.arrows_between(c, e)) {
          coordinates[0] = x->act(l, u);
          for (Elem v = 0; v < a_->size(e); ++v) {
            coordinates[1] = v;
            scratch[position(c, l, v)] = phi(e, domain.encode(e, coordinates));
          }
        }
      }
      const auto found = tables_[c].find(scratch);
      if (!found) throw Error(ErrorCode::NaturalityViolation, "transposed family is not natural");
      components[c].push_back(*found);
    }
  }
  return NatTrans(x, object_, std::move(components));
}

NatTrans Exponential::untranspose(const NatTrans& psi, const ProductCone& domain) const {
  const PresheafRef& x = domain.factors.at(0);
  const FinCategory& cat = *x->base();
  std::vector<std::vector<Elem>> components(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    for (Elem z = 0; z < domain.object->size(c); ++z) {
      const auto pair = domain.decode(c, z);
      components[c].push_back(entry(c, psi(c, pair[0]), cat.identity(c), pair[1]));
    }
  }
  return NatTrans(domain.object, b_, std::move(components));
}

}  // namespace toposbench
