#include "toposbench/finiteness/closure.hpp"

#include <deque>

#include "toposbench/error.hpp"
#include "toposbench/limits.hpp"

namespace toposbench::finiteness {

Subfunctor closure_subobject(const ClosureSpec& spec) {
  const Presheaf& host = *spec.host;
  const FinCategory& cat = *host.base();
  if (spec.generators.host() != spec.host && !spec.generators.host()->same_structure(host)) {
    throw Error(ErrorCode::BaseMismatch, "generators live in another presheaf");
  }
  std::vector<std::vector<bool>> part(cat.object_count());
  std::vector<std::vector<Elem>> members(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c) part[c].assign(host.size(c), false);

  std::deque<std::pair<ObjectId, Elem>> queue;
  auto add = [&](ObjectId c, Elem x) {
    if (part[c][x]) return;
    part[c][x] = true;
    queue.emplace_back(c, x);
  };
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    for (Elem x : spec.generators.elements(c)) add(c, x);
  }
  while (!queue.empty()) {
    const auto [c, x] = queue.front();
    queue.pop_front();
    for (ArrowId f : cat.arrows_from(c)) add(cat.cod(f), host.act(f, x));
    for (const auto& op : spec.operations) {
      // Iterate by index: add() may grow members[c].
      for (std::size_t i = 0; i < members[c].size(); ++i) {
        const Elem y = members[c][i];
        add(c, op.apply(c, x, y));
        add(c, op.apply(c, y, x));
      }
      add(c, op.apply(c, x, x));
    }
    members[c].push_back(x);
  }
  return Subfunctor(spec.host, std::move(part));
}

Certification certify_operation(const PresheafRef& host, const BinaryOperation& op) {
  const FinCategory& cat = *host->base();
  for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
    const ObjectId c = cat.dom(f);
    const ObjectId d = cat.cod(f);
    for (Elem a = 0; a < host->size(c); ++a) {
      for (Elem b = 0; b < host->size(c); ++b) {
        if (host->act(f, op.apply(c, a, b)) != op.apply(d, host->act(f, a), host->act(f, b))) {
          return CertificationFailure{
              "naturality of " + op.name,
              "arrow " + cat.arrow(f).name + " on (" + std::to_string(a) + ", " +
                  std::to_string(b) + ")"};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<ObjectId> position_stages(const Exponential& power, ObjectId c) {
  const FinCategory& cat = *power.exponent()->base();
  std::vector<ObjectId> stages(power.table_width(c));
  for (ArrowId l : cat.arrows_from(c)) {
    const ObjectId e = cat.cod(l);
    for (Elem x = 0; x < power.exponent()->size(e); ++x) stages[power.position(c, l, x)] = e;
  }
  return stages;
}

BinaryOperation internal_union(const ExponentialRef& power, const OmegaRef& omega) {
  const FinCategory& cat = *power->exponent()->base();
  auto stages = std::make_shared<std::vector<std::vector<ObjectId>>>();
  for (ObjectId c = 0; c < cat.object_count(); ++c) stages->push_back(position_stages(*power, c));
  return {"union", [power, omega, stages](ObjectId c, Elem a, Elem b) {
            const auto ta = power->table(c, a);
            const auto tb = power->table(c, b);
            const auto& at = (*stages)[c];
            std::vector<Elem> out(ta.size());
            for (std::size_t i = 0; i < out.size(); ++i) out[i] = omega->join(at[i], ta[i], tb[i]);
            const auto id = power->find(c, out);
            if (!id) throw Error(ErrorCode::NaturalityViolation, "union left Omega^A");
            return *id;
          }};
}

namespace {

NatTrans global_family(const Exponential& power, const OmegaStructure& omega,
                       const std::function<Elem(ArrowId, Elem)>& entry) {
  const FinCategory& cat = *power.exponent()->base();
  std::vector<std::vector<Elem>> components(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    std::vector<Elem> table(power.table_width(c));
    for (ArrowId l : cat.arrows_from(c)) {
      for (Elem x = 0; x < power.exponent()->size(cat.cod(l)); ++x) {
        table[power.position(c, l, x)] = entry(l, x);
      }
    }
    components[c] = {*power.find(c, table)};
  }
  return NatTrans(omega.terminal_object(), power.object(), std::move(components));
}

}  // namespace

NatTrans name_of(const Subfunctor& s, const Exponential& power, const OmegaStructure& omega) {
  const NatTrans chi = omega.classify(s);
  const FinCategory& cat = *power.exponent()->base();
  return global_family(power, omega, [&](ArrowId l, Elem x) { return chi(cat.cod(l), x); });
}

NatTrans singleton_map(const Exponential& power, const OmegaStructure& omega) {
  const Presheaf& a = *power.exponent();
  const FinCategory& cat = *a.base();
  std::vector<std::vector<Elem>> components(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    for (Elem v = 0; v < a.size(c); ++v) {
      std::vector<Elem> table(power.table_width(c));
      for (ArrowId l : cat.arrows_from(c)) {
        const ObjectId e = cat.cod(l);
        const Elem moved = a.act(l, v);
        for (Elem x = 0; x < a.size(e); ++x) {
          Cosieve mask = 0;
          for (ArrowId m : cat.arrows_from(e)) {
            if (a.act(m, moved) == a.act(m, x)) mask |= Cosieve{1} << m;
          }
          table[power.position(c, l, x)] = omega.find(e, mask);
        }
      }
      components[c].push_back(*power.find(c, table));
    }
  }
  return NatTrans(power.exponent(), power.object(), std::move(components));
}

}  // namespace toposbench::finiteness
