#include "toposbench/presheaf.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "toposbench/error.hpp"

namespace toposbench {

namespace {

std::string coordinate(const FinCategory& base, ArrowId f) {
  return "'" + base.arrow(f).name + "' (" + base.object_name(base.dom(f)) + " -> " +
         base.object_name(base.cod(f)) + ")";
}

}  // namespace

Presheaf::Presheaf(CategoryRef base, std::vector<std::vector<std::string>> carriers,
                   std::vector<std::vector<Elem>> action)
    : base_(std::move(base)), action_(std::move(action)), names_(std::move(carriers)) {
  if (names_.size() != base_->object_count()) {
    throw Error(ErrorCode::MalformedInput, "presheaf needs one carrier per object");
  }
  for (ObjectId c = 0; c < names_.size(); ++c) {
    sizes_.push_back(names_[c].size());
    std::set<std::string> seen;
    for (const auto& name : names_[c]) {
      if (!seen.insert(name).second) {
        throw Error(ErrorCode::MalformedInput, "duplicate element '" + name +
                                                   "' at stage '" +
                                                   base_->object_name(c) + "'");
      }
    }
  }
  validate();
}

Presheaf::Presheaf(CategoryRef base, std::vector<std::size_t> sizes,
                   std::vector<std::vector<Elem>> action, ElementNamer namer)
    : base_(std::move(base)),
      sizes_(std::move(sizes)),
      action_(std::move(action)),
      namer_(std::move(namer)) {
  if (sizes_.size() != base_->object_count()) {
    throw Error(ErrorCode::MalformedInput, "presheaf needs one carrier per object");
  }
  validate();
}

void Presheaf::validate() const {
  const FinCategory& cat = *base_;
  if (action_.size() != cat.arrow_count()) {
    throw Error(ErrorCode::MalformedInput, "presheaf needs one action per arrow");
  }
  for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
    const auto& map = action_[f];
    if (map.size() != sizes_[cat.dom(f)]) {
      throw Error(ErrorCode::FunctorViolation,
                  "action of " + coordinate(cat, f) + " is not total on its domain");
    }
    for (Elem x = 0; x < map.size(); ++x) {
      if (map[x] >= sizes_[cat.cod(f)]) {
        throw Error(ErrorCode::FunctorViolation,
                    "action of " + coordinate(cat, f) + " leaves its codomain at element " +
                        element_name(cat.dom(f), x));
      }
      if (cat.is_identity(f) && map[x] != x) {
        throw Error(ErrorCode::FunctorViolation,
                    "identity " + coordinate(cat, f) + " moves element " +
                        element_name(cat.dom(f), x));
      }
    }
  }
  for (ArrowId g = 0; g < cat.arrow_count(); ++g) {
    for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
      const ArrowId gf = cat.compose(g, f);
      if (gf == kNoArrow) continue;
      for (Elem x = 0; x < sizes_[cat.dom(f)]; ++x) {
        if (action_[gf][x] != action_[g][action_[f][x]]) {
          throw Error(ErrorCode::FunctorViolation,
                      "composition law fails for " + coordinate(cat, g) + " after " +
                          coordinate(cat, f) + " at element " +
                          element_name(cat.dom(f), x));
        }
      }
    }
  }
}

std::size_t Presheaf::total_size() const {
  return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0});
}

std::string Presheaf::element_name(ObjectId c, Elem x) const {
  if (!names_.empty()) return names_[c][x];
  if (namer_) return namer_(c, x);
  return "#" + std::to_string(x);
}

std::optional<Elem> Presheaf::find_element(ObjectId c, const std::string& name) const {
  for (Elem x = 0; x < sizes_[c]; ++x) {
    if (element_name(c, x) == name) return x;
  }
  return std::nullopt;
}

bool Presheaf::same_structure(const Presheaf& other) const {
  return same_base(base_, other.base_) && sizes_ == other.sizes_ &&
         action_ == other.action_;
}

PresheafRef representable(const CategoryRef& base, ObjectId c) {
  const FinCategory& cat = *base;
  std::vector<std::vector<std::string>> carriers(cat.object_count());
  for (ObjectId e = 0; e < cat.object_count(); ++e) {
    for (ArrowId k : cat.arrows_between(c, e)) carriers[e].push_back(cat.arrow(k).name);
  }
  std::vector<std::vector<Elem>> action(cat.arrow_count());
  for (ArrowId g = 0; g < cat.arrow_count(); ++g) {
    for (ArrowId k : cat.arrows_between(c, cat.dom(g))) {
      action[g].push_back(static_cast<Elem>(cat.hom_rank(cat.compose(g, k))));
    }
  }
  return make_presheaf(base, std::move(carriers), std::move(action));
}

NatTrans::NatTrans(PresheafRef source, PresheafRef target,
                   std::vector<std::vector<Elem>> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!same_base(source_->base(), target_->base())) {
    throw Error(ErrorCode::BaseMismatch, "natural transformation between different bases");
  }
  const FinCategory& cat = *source_->base();
  if (components_.size() != cat.object_count()) {
    throw Error(ErrorCode::MalformedInput, "natural transformation needs one component per object");
  }
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    if (components_[c].size() != source_->size(c)) {
      throw Error(ErrorCode::NaturalityViolation,
                  "component at '" + cat.object_name(c) + "' is not total");
    }
    for (Elem x : components_[c]) {
      if (x >= target_->size(c)) {
        throw Error(ErrorCode::NaturalityViolation,
                    "component at '" + cat.object_name(c) + "' leaves the target carrier");
      }
    }
  }
  for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
    const ObjectId c = cat.dom(f);
    const ObjectId d = cat.cod(f);
    for (Elem x = 0; x < source_->size(c); ++x) {
      if (components_[d][source_->act(f, x)] != target_->act(f, components_[c][x])) {
        throw Error(ErrorCode::NaturalityViolation,
                    "naturality square fails at arrow " + coordinate(cat, f) +
                        ", element " + source_->element_name(c, x));
      }
    }
  }
}

bool NatTrans::is_mono() const {
  for (ObjectId c = 0; c < components_.size(); ++c) {
    std::vector<bool> hit(target_->size(c), false);
    for (Elem y : components_[c]) {
      if (hit[y]) return false;
      hit[y] = true;
    }
  }
  return true;
}

bool NatTrans::is_epi() const {
  for (ObjectId c = 0; c < components_.size(); ++c) {
    std::vector<bool> hit(target_->size(c), false);
    for (Elem y : components_[c]) hit[y] = true;
    for (bool h : hit) {
      if (!h) return false;
    }
  }
  return true;
}

bool NatTrans::is_iso() const { return is_mono() && is_epi(); }

bool NatTrans::operator==(const NatTrans& other) const {
  return components_ == other.components_ &&
         source_->same_structure(*other.source_) && target_->same_structure(*other.target_);
}

NatTrans compose(const NatTrans& g, const NatTrans& f) {
  if (!f.target()->same_structure(*g.source())) {
    throw Error(ErrorCode::BaseMismatch, "composing non-composable natural transformations");
  }
  std::vector<std::vector<Elem>> components(f.components().size());
  for (ObjectId c = 0; c < components.size(); ++c) {
    for (Elem x : f.component(c)) components[c].push_back(g(c, x));
  }
  return NatTrans(f.source(), g.target(), std::move(components));
}

NatTrans identity(const PresheafRef& f) {
  std::vector<std::vector<Elem>> components(f->base()->object_count());
  for (ObjectId c = 0; c < components.size(); ++c) {
    components[c].resize(f->size(c));
    std::iota(components[c].begin(), components[c].end(), Elem{0});
  }
  return NatTrans(f, f, std::move(components));
}

Subfunctor::Subfunctor(PresheafRef host, std::vector<std::vector<bool>> part)
    : host_(std::move(host)), part_(std::move(part)) {
  const FinCategory& cat = *host_->base();
  if (part_.size() != cat.object_count()) {
    throw Error(ErrorCode::MalformedInput, "subfunctor needs one subset per object");
  }
  for (ObjectId c = 0; c < part_.size(); ++c) {
    if (part_[c].size() != host_->size(c)) {
      throw Error(ErrorCode::MalformedInput, "subfunctor subset has the wrong size");
    }
  }
  for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
    for (Elem x = 0; x < host_->size(cat.dom(f)); ++x) {
      if (part_[cat.dom(f)][x] && !part_[cat.cod(f)][host_->act(f, x)]) {
        throw Error(ErrorCode::NotActionClosed,
                    "subset not closed under " + coordinate(cat, f) + " at element " +
                        host_->element_name(cat.dom(f), x));
      }
    }
  }
}

Subfunctor Subfunctor::empty(const PresheafRef& host) {
  std::vector<std::vector<bool>> part;
  for (std::size_t n : host->sizes()) part.emplace_back(n, false);
  return Subfunctor(host, std::move(part));
}

Subfunctor Subfunctor::full(const PresheafRef& host) {
  std::vector<std::vector<bool>> part;
  for (std::size_t n : host->sizes()) part.emplace_back(n, true);
  return Subfunctor(host, std::move(part));
}

std::size_t Subfunctor::size(ObjectId c) const {
  return static_cast<std::size_t>(std::count(part_[c].begin(), part_[c].end(), true));
}

std::size_t Subfunctor::total_size() const {
  std::size_t total = 0;
  for (ObjectId c = 0; c < part_.size(); ++c) total += size(c);
  return total;
}

std::vector<Elem> Subfunctor::elements(ObjectId c) const {
  std::vector<Elem> out;
  for (Elem x = 0; x < part_[c].size(); ++x) {
    if (part_[c][x]) out.push_back(x);
  }
  return out;
}

bool Subfunctor::is_full() const {
  for (const auto& stage : part_) {
    for (bool b : stage) {
      if (!b) return false;
    }
  }
  return true;
}

bool Subfunctor::operator<=(const Subfunctor& other) const {
  for (ObjectId c = 0; c < part_.size(); ++c) {
    for (Elem x = 0; x < part_[c].size(); ++x) {
      if (part_[c][x] && !other.part_[c][x]) return false;
    }
  }
  return true;
}

PresheafRef Subfunctor::as_presheaf() const {
  if (presheaf_) return presheaf_;
  const FinCategory& cat = *host_->base();
  std::vector<std::vector<Elem>> local(cat.object_count());
  std::vector<std::vector<std::string>> carriers(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    local[c].assign(host_->size(c), 0);
    Elem next = 0;
    for (Elem x = 0; x < host_->size(c); ++x) {
      if (part_[c][x]) {
        local[c][x] = next++;
        carriers[c].push_back(host_->element_name(c, x));
      }
    }
  }
  std::vector<std::vector<Elem>> action(cat.arrow_count());
  for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
    for (Elem x = 0; x < host_->size(cat.dom(f)); ++x) {
      if (part_[cat.dom(f)][x]) action[f].push_back(local[cat.cod(f)][host_->act(f, x)]);
    }
  }
  presheaf_ = make_presheaf(host_->base(), std::move(carriers), std::move(action));
  return presheaf_;
}

NatTrans Subfunctor::inclusion() const {
  std::vector<std::vector<Elem>> components(part_.size());
  for (ObjectId c = 0; c < part_.size(); ++c) components[c] = elements(c);
  return NatTrans(as_presheaf(), host_, std::move(components));
}

Subfunctor generated_subfunctor(const PresheafRef& host,
                                const std::vector<std::vector<bool>>& seeds) {
  const FinCategory& cat = *host->base();
  std::vector<std::vector<bool>> part(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c) part[c].assign(host->size(c), false);
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    for (Elem x = 0; x < host->size(c); ++x) {
      if (!seeds[c][x]) continue;
      for (ArrowId f : cat.arrows_from(c)) part[cat.cod(f)][host->act(f, x)] = true;
    }
  }
  return Subfunctor(host, std::move(part));
}

Subfunctor image(const NatTrans& f) {
  const PresheafRef& target = f.target();
  std::vector<std::vector<bool>> part;
  for (std::size_t n : target->sizes()) part.emplace_back(n, false);
  for (ObjectId c = 0; c < part.size(); ++c) {
    for (Elem y : f.component(c)) part[c][y] = true;
  }
  return Subfunctor(target, std::move(part));
}

}  // namespace toposbench
