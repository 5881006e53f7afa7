#include "toposbench/enumerate.hpp"

#include <algorithm>

#include "toposbench/error.hpp"
#include "toposbench/limits.hpp"

namespace toposbench {

namespace {

struct Link {
  std::size_t other;  // flattened position of the partner element
  ArrowId arrow;
};

// Constraint graph of the naturality squares over the flattened source.
struct Layout {
  std::vector<std::size_t> offset;  // per object
  std::vector<ObjectId> stage;      // per position
  std::vector<std::vector<Link>> forced_by;  // earlier p' with F(f)p' = p
  std::vector<std::vector<Link>> checks;     // F(f)p = q with q <= p
};

Layout build_layout(const Presheaf& f) {
  const FinCategory& cat = *f.base();
  Layout layout;
  std::size_t total = 0;
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    layout.offset.push_back(total);
    for (std::size_t i = 0; i < f.size(c); ++i) layout.stage.push_back(c);
    total += f.size(c);
  }
  layout.forced_by.resize(total);
  layout.checks.resize(total);
  for (ArrowId a = 0; a < cat.arrow_count(); ++a) {
    if (cat.is_identity(a)) continue;
    const ObjectId c = cat.dom(a);
    const ObjectId d = cat.cod(a);
    for (Elem x = 0; x < f.size(c); ++x) {
      const std::size_t p = layout.offset[c] + x;
      const std::size_t q = layout.offset[d] + f.act(a, x);
      if (q > p) {
        layout.forced_by[q].push_back({p, a});
      } else {
        layout.checks[p].push_back({q, a});
      }
    }
  }
  return layout;
}

class Walker {
 public:
  Walker(const Presheaf& f, const Presheaf& g, NatFilter filter,
         const std::function<bool(std::span<const Elem>)>& visit)
      : f_(f), g_(g), filter_(filter), visit_(visit), layout_(build_layout(f)) {
    values_.assign(layout_.stage.size(), 0);
    const FinCategory& cat = *f.base();
    used_.resize(cat.object_count());
    for (ObjectId c = 0; c < cat.object_count(); ++c) used_[c].assign(g.size(c), 0);
    remaining_.resize(cat.object_count());
    for (ObjectId c = 0; c < cat.object_count(); ++c) remaining_[c] = f.size(c);
    covered_.assign(cat.object_count(), 0);
  }

  void run() {
    if (wants_mono() || wants_epi()) {
      for (ObjectId c = 0; c < f_.base()->object_count(); ++c) {
        if (wants_mono() && f_.size(c) > g_.size(c)) return;
        if (wants_epi() && f_.size(c) < g_.size(c)) return;
      }
    }
    descend(0);
  }

 private:
  bool wants_mono() const { return filter_ == NatFilter::Mono || filter_ == NatFilter::Iso; }
  bool wants_epi() const { return filter_ == NatFilter::Epi || filter_ == NatFilter::Iso; }

  bool admissible(std::size_t p, Elem v) const {
    for (const Link& link : layout_.checks[p]) {
      const Elem image = g_.act(link.arrow, v);
      const Elem expected = link.other == p ? v : values_[link.other];
      if (image != expected) return false;
    }
    return true;
  }

  // Returns false once the visitor asks to stop.
  bool descend(std::size_t p) {
    if (p == values_.size()) {
      return visit_(std::span<const Elem>(values_));
    }
    const ObjectId c = layout_.stage[p];
    const auto& forced = layout_.forced_by[p];
    if (!forced.empty()) {
      const Elem v = g_.act(forced.front().arrow, values_[forced.front().other]);
      for (const Link& link : forced) {
        if (g_.act(link.arrow, values_[link.other]) != v) return true;
      }
      return try_value(p, c, v);
    }
    for (Elem v = 0; v < g_.size(c); ++v) {
      if (!try_value(p, c, v)) return false;
    }
    return true;
  }

  bool try_value(std::size_t p, ObjectId c, Elem v) {
    if (wants_mono() && used_[c][v] > 0) return true;
    if (!admissible(p, v)) return true;
    values_[p] = v;
    if (used_[c][v]++ == 0) ++covered_[c];
    --remaining_[c];
    bool keep_going = true;
    if (!wants_epi() || covered_[c] + remaining_[c] >= g_.size(c)) {
      keep_going = descend(p + 1);
    }
    ++remaining_[c];
    if (--used_[c][v] == 0) --covered_[c];
    return keep_going;
  }

  const Presheaf& f_;
  const Presheaf& g_;
  NatFilter filter_;
  const std::function<bool(std::span<const Elem>)>& visit_;
  Layout layout_;
  std::vector<Elem> values_;
  std::vector<std::vector<std::size_t>> used_;
  std::vector<std::size_t> remaining_;
  std::vector<std::size_t> covered_;
};

}  // namespace

void for_each_nat_trans(const Presheaf& f, const Presheaf& g, NatFilter filter,
                        const std::function<bool(std::span<const Elem>)>& visit) {
  if (!same_base(f.base(), g.base())) {
    throw Error(ErrorCode::BaseMismatch, "presheaves over different bases");
  }
  Walker(f, g, filter, visit).run();
}

std::vector<std::vector<Elem>> unflatten(const Presheaf& source, std::span<const Elem> flat) {
  std::vector<std::vector<Elem>> components(source.base()->object_count());
  std::size_t p = 0;
  for (ObjectId c = 0; c < components.size(); ++c) {
    components[c].assign(flat.begin() + static_cast<std::ptrdiff_t>(p),
                         flat.begin() + static_cast<std::ptrdiff_t>(p + source.size(c)));
    p += source.size(c);
  }
  return components;
}

std::vector<NatTrans> enumerate_nat_trans(const PresheafRef& f, const PresheafRef& g,
                                          NatFilter filter) {
  std::vector<NatTrans> out;
  for_each_nat_trans(*f, *g, filter, [&](std::span<const Elem> flat) {
    out.emplace_back(f, g, unflatten(*f, flat));
    return true;
  });
  return out;
}

std::size_t count_nat_trans(const PresheafRef& f, const PresheafRef& g, NatFilter filter) {
  std::size_t count = 0;
  for_each_nat_trans(*f, *g, filter, [&](std::span<const Elem>) {
    ++count;
    return true;
  });
  return count;
}

std::vector<NatTrans> global_elements(const PresheafRef& f) {
  return enumerate_nat_trans(terminal(f->base()), f);
}

namespace {

class PresheafSearch {
 public:
  PresheafSearch(const CategoryRef& base, std::vector<std::size_t> sizes,
                 std::vector<PresheafRef>& out)
      : base_(base), cat_(*base), sizes_(std::move(sizes)), out_(out) {
    action_.resize(cat_.arrow_count());
    for (ArrowId a = 0; a < cat_.arrow_count(); ++a) {
      action_[a].assign(sizes_[cat_.dom(a)], 0);
      if (cat_.is_identity(a)) {
        for (Elem x = 0; x < action_[a].size(); ++x) action_[a][x] = x;
      } else {
        free_.push_back(a);
      }
    }
  }

  void run() { assign_arrow(0); }

 private:
  bool consistent_upto(std::size_t k) const {
    // Laws among identities and free_[0..k].
    std::vector<bool> done(cat_.arrow_count(), false);
    for (ArrowId a = 0; a < cat_.arrow_count(); ++a) done[a] = cat_.is_identity(a);
    for (std::size_t i = 0; i <= k; ++i) done[free_[i]] = true;
    for (ArrowId g = 0; g < cat_.arrow_count(); ++g) {
      if (!done[g]) continue;
      for (ArrowId f = 0; f < cat_.arrow_count(); ++f) {
        if (!done[f]) continue;
        const ArrowId gf = cat_.compose(g, f);
        if (gf == kNoArrow || !done[gf]) continue;
        for (Elem x = 0; x < sizes_[cat_.dom(f)]; ++x) {
          if (action_[gf][x] != action_[g][action_[f][x]]) return false;
        }
      }
    }
    return true;
  }

  void assign_arrow(std::size_t k) {
    if (k == free_.size()) {
      emit();
      return;
    }
    const ArrowId a = free_[k];
    const std::size_t domain = sizes_[cat_.dom(a)];
    const std::size_t codomain = sizes_[cat_.cod(a)];
    if (domain > 0 && codomain == 0) return;
    std::vector<Elem>& map = action_[a];
    std::fill(map.begin(), map.end(), 0);
    while (true) {
      if (consistent_upto(k)) assign_arrow(k + 1);
      std::size_t i = domain;
      while (i > 0) {
        --i;
        if (++map[i] < codomain) break;
        map[i] = 0;
        if (i == 0) return;
      }
      if (domain == 0) return;
    }
  }

  void emit() {
    std::vector<std::vector<std::string>> carriers(cat_.object_count());
    for (ObjectId c = 0; c < cat_.object_count(); ++c) {
      for (std::size_t i = 0; i < sizes_[c]; ++i) carriers[c].push_back("x" + std::to_string(i));
    }
    out_.push_back(make_presheaf(base_, std::move(carriers), action_));
  }

  CategoryRef base_;
  const FinCategory& cat_;
  std::vector<std::size_t> sizes_;
  std::vector<PresheafRef>& out_;
  std::vector<std::vector<Elem>> action_;
  std::vector<ArrowId> free_;
};

}  // namespace

std::vector<PresheafRef> enumerate_presheaves(const CategoryRef& base,
                                              std::size_t max_stage_size) {
  std::vector<PresheafRef> out;
  const std::size_t n = base->object_count();
  std::vector<std::size_t> sizes(n, 0);
  while (true) {
    PresheafSearch(base, sizes, out).run();
    std::size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (++sizes[i] <= max_stage_size) {
        done = false;
        break;
      }
      sizes[i] = 0;
    }
    if (done) break;
  }
  return out;
}

}  // namespace toposbench
