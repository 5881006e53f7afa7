#include "toposbench/omega.hpp"

#include <algorithm>
#include <unordered_map>

#include "toposbench/error.hpp"

namespace toposbench {

namespace {

struct SubLayout {
  std::vector<std::size_t> offset;
  std::vector<ObjectId> stage;
  std::vector<std::vector<std::size_t>> pushed_from;  // earlier q with F(f)q = p
  std::vector<std::vector<std::size_t>> pushes_to;    // earlier q = F(f)p
};

class SubWalker {
 public:
  SubWalker(const Presheaf& f,
            const std::function<bool(const std::vector<std::vector<bool>>&)>& visit)
      : f_(f), visit_(visit) {
    const FinCategory& cat = *f.base();
    std::size_t total = 0;
    for (ObjectId c = 0; c < cat.object_count(); ++c) {
      layout_.offset.push_back(total);
      for (std::size_t i = 0; i < f.size(c); ++i) layout_.stage.push_back(c);
      total += f.size(c);
    }
    layout_.pushed_from.resize(total);
    layout_.pushes_to.resize(total);
    for (ArrowId a = 0; a < cat.arrow_count(); ++a) {
      if (cat.is_identity(a)) continue;
      for (Elem x = 0; x < f.size(cat.dom(a)); ++x) {
        const std::size_t p = layout_.offset[cat.dom(a)] + x;
        const std::size_t q = layout_.offset[cat.cod(a)] + f.act(a, x);
        if (q > p) {
          layout_.pushed_from[q].push_back(p);
        } else if (q < p) {
          layout_.pushes_to[p].push_back(q);
        }
      }
    }
    in_.assign(total, false);
    part_.resize(cat.object_count());
    for (ObjectId c = 0; c < cat.object_count(); ++c) part_[c].assign(f.size(c), false);
  }

  void run() { descend(0); }

 private:
  bool descend(std::size_t p) {
    if (p == in_.size()) return visit_(part_);
    bool must_in = false;
    for (std::size_t q : layout_.pushed_from[p]) must_in = must_in || in_[q];
    bool may_in = true;
    for (std::size_t q : layout_.pushes_to[p]) may_in = may_in && in_[q];
    const ObjectId c = layout_.stage[p];
    const std::size_t x = p - layout_.offset[c];
    if (!must_in) {
      if (!descend(p + 1)) return false;
    }
    if (may_in) {
      in_[p] = true;
      part_[c][x] = true;
      const bool keep = descend(p + 1);
      in_[p] = false;
      part_[c][x] = false;
      if (!keep) return false;
    }
    return true;
  }

  const Presheaf& f_;
  const std::function<bool(const std::vector<std::vector<bool>>&)>& visit_;
  SubLayout layout_;
  std::vector<bool> in_;
  std::vector<std::vector<bool>> part_;
};

}  // namespace

void for_each_subfunctor(const Presheaf& f,
                         const std::function<bool(const std::vector<std::vector<bool>>&)>& visit) {
  SubWalker(f, visit).run();
}

std::vector<Subfunctor> enumerate_subfunctors(const PresheafRef& f) {
  std::vector<Subfunctor> out;
  for_each_subfunctor(*f, [&](const std::vector<std::vector<bool>>& part) {
    out.emplace_back(f, part);
    return true;
  });
  return out;
}

namespace {

void require_same_host(const Subfunctor& a, const Subfunctor& b) {
  if (!a.host()->same_structure(*b.host())) {
    throw Error(ErrorCode::BaseMismatch, "subfunctors of different hosts");
  }
}

}  // namespace

Subfunctor meet(const Subfunctor& a, const Subfunctor& b) {
  require_same_host(a, b);
  auto part = a.part();
  for (ObjectId c = 0; c < part.size(); ++c)
    for (Elem x = 0; x < part[c].size(); ++x) part[c][x] = part[c][x] && b.contains(c, x);
  return Subfunctor(a.host(), std::move(part));
}

Subfunctor join(const Subfunctor& a, const Subfunctor& b) {
  require_same_host(a, b);
  auto part = a.part();
  for (ObjectId c = 0; c < part.size(); ++c)
    for (Elem x = 0; x < part[c].size(); ++x) part[c][x] = part[c][x] || b.contains(c, x);
  return Subfunctor(a.host(), std::move(part));
}

Subfunctor implies(const Subfunctor& a, const Subfunctor& b) {
  require_same_host(a, b);
  const Presheaf& host = *a.host();
  const FinCategory& cat = *host.base();
  std::vector<std::vector<bool>> part(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    for (Elem x = 0; x < host.size(c); ++x) {
      bool holds = true;
      for (ArrowId f : cat.arrows_from(c)) {
        const Elem y = host.act(f, x);
        if (a.contains(cat.cod(f), y) && !b.contains(cat.cod(f), y)) {
          holds = false;
          break;
        }
      }
      part[c].push_back(holds);
    }
  }
  return Subfunctor(a.host(), std::move(part));
}

Subfunctor negate(const Subfunctor& a) { return implies(a, Subfunctor::empty(a.host())); }

bool is_complemented(const Subfunctor& a) { return join(a, negate(a)).is_full(); }

SubobjectLattice::SubobjectLattice(PresheafRef host)
    : host_(std::move(host)), elements_(enumerate_subfunctors(host_)) {}

std::size_t SubobjectLattice::index_of(const Subfunctor& s) const {
  const auto it = std::lower_bound(
      elements_.begin(), elements_.end(), s,
      [](const Subfunctor& lhs, const Subfunctor& rhs) {
        // Canonical order is lexicographic on the flattened characteristic vector.
        for (ObjectId c = 0; c < lhs.part().size(); ++c) {
          if (lhs.part()[c] != rhs.part()[c]) return lhs.part()[c] < rhs.part()[c];
        }
        return false;
      });
  if (it == elements_.end() || !(*it == s)) {
    throw Error(ErrorCode::NotActionClosed, "subfunctor not in lattice");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

SubobjectLattice subobject_lattice(const PresheafRef& f) { return SubobjectLattice(f); }

std::shared_ptr<const OmegaStructure> OmegaStructure::build(const CategoryRef& base,
                                                            const Budget& budget) {
  const FinCategory& cat = *base;
  if (cat.arrow_count() > 64) {
    throw Error(ErrorCode::SizeBudgetExceeded,
                "subobject classifier supports at most 64 arrows");
  }
  std::shared_ptr<OmegaStructure> omega(new OmegaStructure());
  omega->base_ = base;
  const std::size_t n = cat.object_count();
  omega->cosieves_.resize(n);
  omega->maximal_.resize(n);
  for (ObjectId c = 0; c < n; ++c) {
    const PresheafRef h = representable(base, c);
    std::vector<std::pair<std::vector<bool>, Cosieve>> found;
    for_each_subfunctor(*h, [&](const std::vector<std::vector<bool>>& part) {
      if (found.size() >= budget.stage_elements) {
        throw Error(ErrorCode::SizeBudgetExceeded,
                    "subobject classifier stage '" + cat.object_name(c) + "' exceeds the budget");
      }
      Cosieve s = 0;
      std::vector<bool> key;
      for (ArrowId f : cat.arrows_from(c)) {
        const bool in = part[cat.cod(f)][cat.hom_rank(f)];
        key.push_back(in);
        if (in) s |= Cosieve{1} << f;
      }
      found.emplace_back(std::move(key), s);
      return true;
    });
    std::sort(found.begin(), found.end());
    for (const auto& entry : found) omega->cosieves_[c].push_back(entry.second);
    for (ArrowId f : cat.arrows_from(c)) omega->maximal_[c] |= Cosieve{1} << f;
  }

  std::vector<std::size_t> sizes(n);
  for (ObjectId c = 0; c < n; ++c) sizes[c] = omega->cosieves_[c].size();
  std::vector<std::vector<Elem>> action(cat.arrow_count());
  for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
    const ObjectId c = cat.dom(f);
    const ObjectId d = cat.cod(f);
    for (Cosieve s : omega->cosieves_[c]) {
      Cosieve restricted = 0;
      for (ArrowId g : cat.arrows_from(d)) {
        if (s >> cat.compose(g, f) & 1) restricted |= Cosieve{1} << g;
      }
      action[f].push_back(omega->find(d, restricted));
    }
  }
  std::weak_ptr<const OmegaStructure> weak = omega;
  auto namer = [weak](ObjectId c, Elem w) {
    const auto self = weak.lock();
    if (!self) return "#" + std::to_string(w);
    return self->cosieve_name(c, self->cosieve(c, w));
  };
  omega->omega_ = make_presheaf(base, sizes, std::move(action), namer);
  omega->terminal_ = terminal(base);
  std::vector<std::vector<Elem>> top(n);
  for (ObjectId c = 0; c < n; ++c) top[c] = {omega->top_at(c)};
  omega->top_ = std::make_unique<NatTrans>(omega->terminal_, omega->omega_, std::move(top));
  return omega;
}

Elem OmegaStructure::find(ObjectId c, Cosieve s) const {
  const auto& stage = cosieves_[c];
  for (Elem w = 0; w < stage.size(); ++w) {
    if (stage[w] == s) return w;
  }
  throw Error(ErrorCode::NotActionClosed, "not a cosieve on '" + base_->object_name(c) + "'");
}

Elem OmegaStructure::meet(ObjectId c, Elem a, Elem b) const {
  return find(c, cosieves_[c][a] & cosieves_[c][b]);
}

Elem OmegaStructure::join(ObjectId c, Elem a, Elem b) const {
  return find(c, cosieves_[c][a] | cosieves_[c][b]);
}

Elem OmegaStructure::implies(ObjectId c, Elem a, Elem b) const {
  const FinCategory& cat = *base_;
  const Cosieve s = cosieves_[c][a];
  const Cosieve t = cosieves_[c][b];
  Cosieve result = 0;
  for (ArrowId k : cat.arrows_from(c)) {
    bool holds = true;
    for (ArrowId g : cat.arrows_from(cat.cod(k))) {
      const ArrowId gk = cat.compose(g, k);
      if ((s >> gk & 1) && !(t >> gk & 1)) {
        holds = false;
        break;
      }
    }
    if (holds) result |= Cosieve{1} << k;
  }
  return find(c, result);
}

Elem OmegaStructure::negate(ObjectId c, Elem a) const { return implies(c, a, bottom_at(c)); }

NatTrans OmegaStructure::classify(const Subfunctor& s) const {
  const Presheaf& host = *s.host();
  if (!same_base(host.base(), base_)) {
    throw Error(ErrorCode::BaseMismatch, "classifying a subfunctor over another base");
  }
  const FinCategory& cat = *base_;
  std::vector<std::vector<Elem>> components(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    for (Elem x = 0; x < host.size(c); ++x) {
      Cosieve chi = 0;
      for (ArrowId k : cat.arrows_from(c)) {
        if (s.contains(cat.cod(k), host.act(k, x))) chi |= Cosieve{1} << k;
      }
      components[c].push_back(find(c, chi));
    }
  }
  return NatTrans(s.host(), omega_, std::move(components));
}

Subfunctor OmegaStructure::pullback_of_top(const NatTrans& chi) const {
  std::vector<std::vector<bool>> part(chi.components().size());
  for (ObjectId c = 0; c < part.size(); ++c) {
    for (Elem w : chi.component(c)) part[c].push_back(is_top(c, w));
  }
  return Subfunctor(chi.source(), std::move(part));
}

NatTrans OmegaStructure::truth_value(std::vector<Elem> stages) const {
  std::vector<std::vector<Elem>> components;
  for (Elem w : stages) components.push_back({w});
  return NatTrans(terminal_, omega_, std::move(components));
}

std::string OmegaStructure::cosieve_name(ObjectId c, Cosieve s) const {
  const FinCategory& cat = *base_;
  std::string name = "{";
  bool first = true;
  for (ArrowId f : cat.arrows_from(c)) {
    if (!(s >> f & 1)) continue;
    if (!first) name += ",";
    first = false;
    name += cat.arrow(f).name;
  }
  return name + "}";
}

}  // namespace toposbench
