#include "toposbench/finiteness/notions.hpp"

#include "toposbench/enumerate.hpp"
#include "toposbench/error.hpp"
#include "toposbench/logic/parser.hpp"

namespace toposbench::finiteness {

using logic::LType;

const char* const kDedekindSentence =
    "forall f:A->A. ((forall h:A->A. forall g:A->A. ((f o h = f o g) => h = g)) => "
    "(exists h:A->A. ((f o h = id[A]) /\\ (h o f = id[A]))))";

const char* const kKuratowskiSentence =
    "forall z:P(P A). (((empty[A] in z) /\\ (forall a:A. {x:A | x = a} in z) /\\ "
    "(forall y:P A. forall y2:P A. (((y in z) /\\ (y2 in z)) => ((y union y2) in z)))) "
    "=> (A in z))";

FinitenessNotion FinitenessNotion::parse(std::string_view notion, Mode mode) {
  FinitenessNotion out;
  out.mode = mode;
  if (notion == "dedekind") {
    out.tag = Tag::Dedekind;
  } else if (notion == "kuratowski") {
    out.tag = Tag::Kuratowski;
  } else if (notion.substr(0, 3) == "lp:" && notion.size() > 3) {
    out.tag = Tag::Lp;
    std::size_t p = 0;
    for (char ch : notion.substr(3)) {
      if (ch < '0' || ch > '9') throw Error(ErrorCode::MalformedInput, "bad notion '" + std::string(notion) + "'");
      p = p * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (p == 0) throw Error(ErrorCode::MalformedInput, "lp needs p >= 1");
    out.p = p;
  } else {
    throw Error(ErrorCode::MalformedInput, "unknown finiteness notion '" + std::string(notion) + "'");
  }
  return out;
}

std::string FinitenessNotion::name() const {
  switch (tag) {
    case Tag::Dedekind: return "dedekind";
    case Tag::Kuratowski: return "kuratowski";
    case Tag::Lp: return "lp:" + std::to_string(p);
  }
  return "";
}

std::string_view mode_name(Mode mode) { return mode == Mode::Internal ? "internal" : "external"; }

std::string_view scope_name(SquireScope scope) {
  return scope == SquireScope::Global ? "global" : "stagewise";
}

std::string_view satisfaction_name(SquireSatisfaction satisfaction) {
  return satisfaction == SquireSatisfaction::Classical ? "classical" : "forcing";
}

namespace {

logic::Signature ground_signature(const PresheafRef& a) {
  logic::Signature sig;
  sig.bind_ground("A", a);
  return sig;
}

bool name_in(const Subfunctor& s, const NatTrans& name) {
  const FinCategory& cat = *s.host()->base();
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    if (!s.contains(c, name(c, 0))) return false;
  }
  return true;
}

}  // namespace

DedekindResult dedekind(const PresheafRef& a, Mode mode, const logic::EvalOptions& options) {
  DedekindResult out;
  if (mode == Mode::Internal) {
    logic::Evaluator ev(ground_signature(a), options);
    out.truth = ev.holds(std::string_view(kDedekindSentence));
    out.verdict = out.truth->holds;
    return out;
  }
  out.verdict = true;
  for_each_nat_trans(*a, *a, NatFilter::Mono, [&](std::span<const Elem> flat) {
    ++out.monos;
    NatTrans f(a, a, unflatten(*a, flat));
    if (!f.is_iso()) {
      out.verdict = false;
      out.witness = std::move(f);
      return false;
    }
    return true;
  });
  return out;
}

KuratowskiResult kuratowski(const PresheafRef& a, const Budget& budget) {
  const OmegaRef omega = OmegaStructure::build(a->base(), budget);
  const ExponentialRef power = Exponential::build(a, omega->object(), budget);
  const FinCategory& cat = *a->base();

  const NatTrans empty = name_of(Subfunctor::empty(a), *power, *omega);
  const NatTrans singletons = singleton_map(*power, *omega);
  std::vector<std::vector<bool>> seeds(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    seeds[c].assign(power->object()->size(c), false);
    seeds[c][empty(c, 0)] = true;
    for (Elem x = 0; x < a->size(c); ++x) seeds[c][singletons(c, x)] = true;
  }
  ClosureSpec spec{power->object(), generated_subfunctor(power->object(), seeds),
                   {internal_union(power, omega)}};
  KuratowskiResult out{false, power, closure_subobject(spec),
                       name_of(Subfunctor::full(a), *power, *omega), {}};
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    if (!out.closure.contains(c, out.top_name(c, 0))) out.failing_stages.push_back(c);
  }
  out.verdict = out.failing_stages.empty();
  return out;
}

logic::Truth kuratowski_direct(const PresheafRef& a, const logic::EvalOptions& options) {
  logic::Evaluator ev(ground_signature(a), options);
  return ev.holds(std::string_view(kKuratowskiSentence));
}

std::string phi_p_formula(std::size_t p, bool witnesses_in_subset) {
  std::string text;
  for (std::size_t i = 1; i <= p; ++i) text += "exists x" + std::to_string(i) + ":A. ";
  std::string cover;
  std::string inside;
  for (std::size_t i = 1; i <= p; ++i) {
    const std::string x = "x" + std::to_string(i);
    cover += (i > 1 ? " \\/ " : "") + std::string("y = ") + x;
    inside += (i > 1 ? " /\\ " : "") + x + " in S";
  }
  const std::string body = "(forall y:A. (y in S => (" + cover + ")))";
  text += witnesses_in_subset ? "((" + inside + ") /\\ " + body + ")" : body;
  return text;
}

SquireResult squire_lp(const PresheafRef& a, std::size_t p, const SquireOptions& options) {
  if (p == 0) throw Error(ErrorCode::MalformedInput, "lp needs p >= 1");
  const OmegaRef omega = OmegaStructure::build(a->base(), options.budget);
  const ExponentialRef power = Exponential::build(a, omega->object(), options.budget);
  const FinCategory& cat = *a->base();
  const PresheafRef& host = power->object();

  std::vector<std::vector<bool>> seeds(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c) seeds[c].assign(host->size(c), false);

  auto classical_fibre = [&](std::size_t count) {
    return count <= p && (!options.witnesses_in_subset || count >= 1);
  };

  std::optional<logic::Evaluator> ev;
  logic::Evaluator::Handle phi = 0;
  if (options.satisfaction == SquireSatisfaction::Forcing) {
    logic::EvalOptions eval_options;
    eval_options.budget = options.budget;
    ev.emplace(ground_signature(a), eval_options);
    phi = ev->prepare(logic::parse_formula(phi_p_formula(p, options.witnesses_in_subset)),
                      {{"S", LType::power(LType::ground("A"))}});
  }

  if (options.scope == SquireScope::Global) {
    for (const Subfunctor& s : enumerate_subfunctors(a)) {
      const NatTrans name = name_of(s, *power, *omega);
      bool ok = true;
      for (ObjectId c = 0; c < cat.object_count() && ok; ++c) {
        if (options.satisfaction == SquireSatisfaction::Classical) {
          ok = classical_fibre(s.size(c));
        } else {
          const Elem value = name(c, 0);
          ok = ev->forced(phi, c, std::span<const Elem>(&value, 1));
        }
      }
      if (!ok) continue;
      for (ObjectId c = 0; c < cat.object_count(); ++c) seeds[c][name(c, 0)] = true;
    }
  } else {
    for (ObjectId c = 0; c < cat.object_count(); ++c) {
      const std::vector<ObjectId> stages = position_stages(*power, c);
      for (Elem s = 0; s < host->size(c); ++s) {
        bool ok = true;
        if (options.satisfaction == SquireSatisfaction::Classical) {
          for (ArrowId l : cat.arrows_from(c)) {
            const ObjectId e = cat.cod(l);
            std::size_t count = 0;
            for (Elem x = 0; x < a->size(e); ++x) {
              if (omega->is_top(e, power->entry(c, s, l, x))) ++count;
            }
            if (!classical_fibre(count)) {
              ok = false;
              break;
            }
          }
        } else {
          ok = ev->forced(phi, c, std::span<const Elem>(&s, 1));
        }
        seeds[c][s] = ok;
      }
    }
  }

  Subfunctor generators = generated_subfunctor(host, seeds);
  ClosureSpec spec{host, generators, {internal_union(power, omega)}};
  SquireResult out{false, power, generators, closure_subobject(spec)};
  out.verdict = name_in(out.lattice, name_of(Subfunctor::full(a), *power, *omega));
  return out;
}

std::vector<SquireVariant> squire_variants(const PresheafRef& a, std::size_t p,
                                           bool witnesses_in_subset) {
  std::vector<SquireVariant> out;
  for (SquireScope scope : {SquireScope::Global, SquireScope::StageWise}) {
    for (SquireSatisfaction sat : {SquireSatisfaction::Classical, SquireSatisfaction::Forcing}) {
      SquireOptions options;
      options.scope = scope;
      options.satisfaction = sat;
      options.witnesses_in_subset = witnesses_in_subset;
      out.push_back({scope, sat, squire_lp(a, p, options).verdict});
    }
  }
  return out;
}

}  // namespace toposbench::finiteness
