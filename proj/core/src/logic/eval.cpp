#include "toposbench/logic/eval.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "toposbench/error.hpp"
#include "toposbench/logic/parser.hpp"

namespace toposbench::logic {

TypeObject::TypeObject(TypeRef type, PresheafRef object)
    : type_(std::move(type)), object_(std::move(object)) {}

TypeObject::TypeObject(TypeRef type, std::vector<const TypeObject*> factors, CategoryRef base)
    : type_(std::move(type)), base_(std::move(base)), factors_(std::move(factors)) {}

TypeObject::TypeObject(TypeRef type, const TypeObject* element, const TypeObject* codomain,
                       Budget budget)
    : type_(std::move(type)), budget_(budget), element_(element), codomain_(codomain) {}

const PresheafRef& TypeObject::object() const {
  if (!object_) object_ = element_ ? exponential().object() : cone().object;
  return object_;
}

const ProductCone& TypeObject::cone() const {
  if (!cone_) {
    std::vector<PresheafRef> objects;
    for (const TypeObject* f : factors_) objects.push_back(f->object());
    cone_ = product(base_, objects);
  }
  return *cone_;
}

const Exponential& TypeObject::exponential() const {
  if (!exponential_) {
    exponential_ = Exponential::build(element_->object(), codomain_->object(), budget_);
  }
  return *exponential_;
}

namespace {

using K = LType::Kind;

constexpr std::size_t kMaxVars = 24;
constexpr std::size_t kMemoWidth = 8;

struct Env {
  std::array<Elem, kMaxVars> v{};
  std::array<const TypeObject*, kMaxVars> t{};
  std::uint32_t n = 0;
};

struct Node {
  Op op;
  const TypeObject* type = nullptr;
  const TypeObject* binder = nullptr;
  std::uint32_t level = 0;
  std::uint32_t index = 0;
  const NatTrans* fn = nullptr;
  std::vector<const Node*> kids;
  std::vector<std::uint32_t> free;
  bool has_binder = false;
  bool memo = false;
  bool set_former = false;
  std::uint32_t id = 0;
};

struct MemoKey {
  std::array<Elem, kMemoWidth> k{};
  bool operator==(const MemoKey& o) const { return k == o.k; }
};

struct MemoHash {
  std::size_t operator()(const MemoKey& key) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Elem x : key.k) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

bool is_set_former(Op op) {
  return op == Op::Comprehension || op == Op::Union || op == Op::Inter || op == Op::Empty ||
         op == Op::TypeSet;
}

bool is_binder(Op op) { return op == Op::Comprehension || op == Op::Forall || op == Op::Exists; }

}  // namespace

struct Evaluator::Impl {
  Signature sig;
  EvalOptions options;
  OmegaRef omega;
  const FinCategory* cat = nullptr;
  std::map<std::string, std::unique_ptr<TypeObject>> types;
  std::map<std::string, std::unique_ptr<ProductCone>> contexts;
  std::vector<std::unique_ptr<Node>> nodes;
  std::unordered_map<std::string, const Node*> interned;
  std::vector<std::unordered_map<MemoKey, bool, MemoHash>> memo;
  std::size_t memo_size = 0;
  std::vector<std::pair<const Node*, Context>> prepared;
  EvalStats stats;

  Impl(Signature s, EvalOptions o) : sig(std::move(s)), options(o) {
    if (!sig.base) throw Error(ErrorCode::MalformedInput, "signature has no base category");
    cat = sig.base.get();
    omega = OmegaStructure::build(sig.base, options.budget);
  }

  const TypeObject& materialize(const TypeRef& type) {
    const std::string key = to_string(type);
    if (auto it = types.find(key); it != types.end()) return *it->second;
    std::unique_ptr<TypeObject> out;
    switch (type->kind) {
      case K::Unit: out = std::make_unique<TypeObject>(type, omega->terminal_object()); break;
      case K::Omega: out = std::make_unique<TypeObject>(type, omega->object()); break;
      case K::Ground: {
        const auto it = sig.grounds.find(type->name);
        if (it == sig.grounds.end()) {
          throw Error(ErrorCode::UnboundGround, "unbound ground type '" + type->name + "'");
        }
        if (!same_base(it->second->base(), sig.base)) {
          throw Error(ErrorCode::BaseMismatch, "ground type '" + type->name + "' lives over another base");
        }
        out = std::make_unique<TypeObject>(type, it->second);
        break;
      }
      case K::Product: {
        std::vector<const TypeObject*> factors;
        for (const auto& f : type->args) factors.push_back(&materialize(f));
        out = std::make_unique<TypeObject>(type, std::move(factors), sig.base);
        break;
      }
      case K::Power:
        out = std::make_unique<TypeObject>(type, &materialize(type->args[0]),
                                           &materialize(LType::omega()), options.budget);
        break;
      case K::Exp:
        out = std::make_unique<TypeObject>(type, &materialize(type->args[0]),
                                           &materialize(type->args[1]), options.budget);
        break;
    }
    return *types.emplace(key, std::move(out)).first->second;
  }

  TermRef prepare(const TermRef& term, const Context& context) {
    return options.expand_derived ? elaborate(term, sig, context) : typecheck(term, sig, context);
  }

  const Node* compile(const TermRef& t) {
    std::vector<const Node*> kids;
    for (const auto& a : t->args) kids.push_back(compile(a));
    std::string key = std::to_string(static_cast<int>(t->op)) + "|" + t->name + "|" +
                      std::to_string(t->index) + "|" + to_string(t->type) + "|" +
                      (t->binder_type ? to_string(t->binder_type) : std::string());
    for (const Node* k : kids) key += "|" + std::to_string(k->id);
    if (auto it = interned.find(key); it != interned.end()) return it->second;

    auto node = std::make_unique<Node>();
    node->op = t->op;
    node->type = &materialize(t->type);
    node->kids = kids;
    node->index = static_cast<std::uint32_t>(t->index);
    node->level = static_cast<std::uint32_t>(t->index);
    node->set_former = is_set_former(t->op);
    if (is_binder(t->op)) {
      node->binder = &materialize(t->binder_type);
      if (t->index >= kMaxVars) {
        throw Error(ErrorCode::SizeBudgetExceeded, "too many nested binders");
      }
    }
    if (t->op == Op::Empty || t->op == Op::TypeSet) node->binder = node->type->element();
    if (t->op == Op::Identity) node->binder = node->type->element();

    if (t->op == Op::App) {
      const auto& fn = sig.functions.at(t->name);
      const TypeObject& dom = materialize(fn.domain);
      const TypeObject& cod = materialize(fn.codomain);
      if (!fn.map->source()->same_structure(*dom.object()) ||
          !fn.map->target()->same_structure(*cod.object())) {
        throw Error(ErrorCode::TypeMismatch,
                    "interpretation of '" + t->name + "' does not match its declared type");
      }
      node->fn = fn.map.get();
    }
    if (t->op == Op::Const) {
      const auto& c = sig.constants.at(t->name);
      if (!c.element->source()->same_structure(*omega->terminal_object()) ||
          !c.element->target()->same_structure(*node->type->object())) {
        throw Error(ErrorCode::TypeMismatch,
                    "interpretation of '" + t->name + "' does not match its declared type");
      }
      node->fn = c.element.get();
    }

    if (t->op == Op::Var) node->free.push_back(node->level);
    for (const Node* k : kids) {
      node->has_binder = node->has_binder || k->has_binder;
      for (std::uint32_t v : k->free) {
        if (is_binder(t->op) && v == node->level) continue;
        node->free.push_back(v);
      }
    }
    std::sort(node->free.begin(), node->free.end());
    node->free.erase(std::unique(node->free.begin(), node->free.end()), node->free.end());
    node->has_binder = node->has_binder || is_binder(t->op);
    node->memo = node->has_binder && t->type->kind == K::Omega &&
                 node->free.size() < kMemoWidth && !node->set_former;

    node->id = static_cast<std::uint32_t>(nodes.size());
    const Node* raw = node.get();
    nodes.push_back(std::move(node));
    memo.emplace_back();
    interned.emplace(std::move(key), raw);
    return raw;
  }

  Env restrict(const Env& env, ArrowId m) const {
    if (cat->is_identity(m)) return env;
    Env out = env;
    for (std::uint32_t i = 0; i < env.n; ++i) out.v[i] = env.t[i]->object()->act(m, env.v[i]);
    return out;
  }

  static Env push(const Env& env, const TypeObject* type, Elem value) {
    Env out = env;
    out.v[out.n] = value;
    out.t[out.n] = type;
    ++out.n;
    return out;
  }

  bool forced(const Node* n, ObjectId e, const Env& env) {
    ++stats.forced_calls;
    MemoKey key;
    if (n->memo) {
      key.k[0] = e;
      for (std::size_t i = 0; i < n->free.size(); ++i) key.k[i + 1] = env.v[n->free[i]];
      auto& table = memo[n->id];
      if (auto it = table.find(key); it != table.end()) {
        ++stats.memo_hits;
        return it->second;
      }
    }
    const bool result = force_uncached(n, e, env);
    if (n->memo) {
      if (memo_size >= options.memo_limit) {
        for (auto& table : memo) table.clear();
        memo_size = 0;
        ++stats.memo_resets;
      }
      memo[n->id].emplace(key, result);
      ++memo_size;
    }
    return result;
  }

  template <typename F>
  bool all_out(ObjectId e, const Env& env, F&& pred) {
    for (ArrowId m : cat->arrows_from(e)) {
      if (!pred(cat->cod(m), restrict(env, m))) return false;
    }
    return true;
  }

  bool force_uncached(const Node* n, ObjectId e, const Env& env) {
    const auto& k = n->kids;
    switch (n->op) {
      case Op::Eq: return equal(k[0], k[1], e, env);
      case Op::Mem: return member(k[1], e, env, value(k[0], e, env));
      case Op::True: return true;
      case Op::False: return false;
      case Op::And: return forced(k[0], e, env) && forced(k[1], e, env);
      case Op::Or: return forced(k[0], e, env) || forced(k[1], e, env);
      case Op::Implies:
        return all_out(e, env, [&](ObjectId d, const Env& r) {
          return !forced(k[0], d, r) || forced(k[1], d, r);
        });
      case Op::Not:
        return all_out(e, env, [&](ObjectId d, const Env& r) { return !forced(k[0], d, r); });
      case Op::Iff:
        return all_out(e, env, [&](ObjectId d, const Env& r) {
          return forced(k[0], d, r) == forced(k[1], d, r);
        });
      case Op::Forall:
        return all_out(e, env, [&](ObjectId d, const Env& r) {
          const std::size_t size = n->binder->object()->size(d);
          for (Elem y = 0; y < size; ++y) {
            if (!forced(k[0], d, push(r, n->binder, y))) return false;
          }
          return true;
        });
      case Op::Exists: {
        const std::size_t size = n->binder->object()->size(e);
        for (Elem y = 0; y < size; ++y) {
          if (forced(k[0], e, push(env, n->binder, y))) return true;
        }
        return false;
      }
      case Op::Subset: {
        const TypeObject* element = k[0]->type->element();
        return all_out(e, env, [&](ObjectId d, const Env& r) {
          const std::size_t size = element->object()->size(d);
          for (Elem y = 0; y < size; ++y) {
            if (member(k[0], d, r, y) && !member(k[1], d, r, y)) return false;
          }
          return true;
        });
      }
      default:
        return omega->is_top(e, value(n, e, env));
    }
  }

  bool member(const Node* set, ObjectId e, const Env& env, Elem y) {
    switch (set->op) {
      case Op::Comprehension: return forced(set->kids[0], e, push(env, set->binder, y));
      case Op::Union: return member(set->kids[0], e, env, y) || member(set->kids[1], e, env, y);
      case Op::Inter: return member(set->kids[0], e, env, y) && member(set->kids[1], e, env, y);
      case Op::Empty: return false;
      case Op::TypeSet: return true;
      default:
        return omega->is_top(
            e, set->type->exponential().entry(e, value(set, e, env), cat->identity(e), y));
    }
  }

  bool equal(const Node* a, const Node* b, ObjectId e, const Env& env) {
    const K kind = a->type->type()->kind;
    if (kind == K::Omega) {
      // Forcing is monotone: agreement on truth at e settles every later stage.
      const bool fa = forced(a, e, env);
      if (fa != forced(b, e, env)) return false;
      if (fa) return true;
      return all_out(e, env, [&](ObjectId d, const Env& r) {
        return forced(a, d, r) == forced(b, d, r);
      });
    }
    if (a->op == Op::Tuple && b->op == Op::Tuple) {
      for (std::size_t i = 0; i < a->kids.size(); ++i) {
        if (!equal(a->kids[i], b->kids[i], e, env)) return false;
      }
      return true;
    }
    if (kind == K::Power && (a->set_former || b->set_former)) {
      const TypeObject* element = a->type->element();
      return all_out(e, env, [&](ObjectId d, const Env& r) {
        const std::size_t size = element->object()->size(d);
        for (Elem y = 0; y < size; ++y) {
          if (member(a, d, r, y) != member(b, d, r, y)) return false;
        }
        return true;
      });
    }
    return value(a, e, env) == value(b, e, env);
  }

  Elem find_family(const TypeObject* type, ObjectId e, const std::vector<Elem>& table) const {
    const auto id = type->exponential().find(e, table);
    if (!id) throw Error(ErrorCode::NaturalityViolation, "computed family is not natural");
    return *id;
  }

  Elem value(const Node* n, ObjectId e, const Env& env) {
    const auto& k = n->kids;
    switch (n->op) {
      case Op::Star: return 0;
      case Op::Var: return env.v[n->level];
      case Op::Const: return (*n->fn)(e, 0);
      case Op::App: return (*n->fn)(e, value(k[0], e, env));
      case Op::Tuple: {
        std::array<Elem, kMaxVars> coords{};
        for (std::size_t i = 0; i < k.size(); ++i) coords[i] = value(k[i], e, env);
        return n->type->cone().encode(e, std::span<const Elem>(coords.data(), k.size()));
      }
      case Op::Proj:
        return k[0]->type->cone().decode(e, value(k[0], e, env))[n->index - 1];
      case Op::ExpApply:
        return k[0]->type->exponential().entry(e, value(k[0], e, env), cat->identity(e),
                                              value(k[1], e, env));
      case Op::Compose: {
        const Exponential& out = n->type->exponential();
        const Exponential& fe = k[0]->type->exponential();
        const Exponential& ge = k[1]->type->exponential();
        const Elem f = value(k[0], e, env);
        const Elem g = value(k[1], e, env);
        const Presheaf& a = *out.exponent();
        std::vector<Elem> table(out.table_width(e));
        for (ArrowId l : cat->arrows_from(e)) {
          const std::size_t size = a.size(cat->cod(l));
          for (Elem x = 0; x < size; ++x) {
            table[out.position(e, l, x)] = fe.entry(e, f, l, ge.entry(e, g, l, x));
          }
        }
        return find_family(n->type, e, table);
      }
      case Op::Identity: {
        const Exponential& out = n->type->exponential();
        std::vector<Elem> table(out.table_width(e));
        for (ArrowId l : cat->arrows_from(e)) {
          const std::size_t size = out.exponent()->size(cat->cod(l));
          for (Elem x = 0; x < size; ++x) table[out.position(e, l, x)] = x;
        }
        return find_family(n->type, e, table);
      }
      default:
        break;
    }
    if (n->set_former) {
      const Exponential& out = n->type->exponential();
      const Presheaf& a = *out.exponent();
      std::vector<Elem> table(out.table_width(e));
      for (ArrowId l : cat->arrows_from(e)) {
        const ObjectId d = cat->cod(l);
        const Env at_d = restrict(env, l);
        for (Elem x = 0; x < a.size(d); ++x) {
          Cosieve mask = 0;
          for (ArrowId m : cat->arrows_from(d)) {
            if (member(n, cat->cod(m), restrict(at_d, m), a.act(m, x))) mask |= Cosieve{1} << m;
          }
          table[out.position(e, l, x)] = omega->find(d, mask);
        }
      }
      return find_family(n->type, e, table);
    }
    // A formula: its truth value is the cosieve of arrows along which it is forced.
    Cosieve mask = 0;
    for (ArrowId m : cat->arrows_from(e)) {
      if (forced(n, cat->cod(m), restrict(env, m))) mask |= Cosieve{1} << m;
    }
    return omega->find(e, mask);
  }

  Env make_env(const Context& context, std::span<const Elem> values) {
    if (context.size() > kMaxVars) throw Error(ErrorCode::SizeBudgetExceeded, "context too large");
    Env env;
    for (std::size_t i = 0; i < context.size(); ++i) {
      env.t[i] = &materialize(context[i].second);
      env.v[i] = values[i];
    }
    env.n = static_cast<std::uint32_t>(context.size());
    return env;
  }

  const ProductCone& context_object(const Context& context) {
    std::string key;
    std::vector<PresheafRef> objects;
    for (const auto& [name, type] : context) {
      key += to_string(type) + ";";
      objects.push_back(materialize(type).object());
    }
    if (auto it = contexts.find(key); it != contexts.end()) return *it->second;
    auto cone = std::make_unique<ProductCone>(product(sig.base, objects));
    return *contexts.emplace(key, std::move(cone)).first->second;
  }
};

Evaluator::Evaluator(Signature sig, EvalOptions options)
    : impl_(std::make_unique<Impl>(std::move(sig), options)) {}

Evaluator::~Evaluator() = default;

const Signature& Evaluator::signature() const { return impl_->sig; }
const OmegaRef& Evaluator::omega() const { return impl_->omega; }
const EvalStats& Evaluator::stats() const { return impl_->stats; }

const TypeObject& Evaluator::materialize(const TypeRef& type) { return impl_->materialize(type); }

const ProductCone& Evaluator::context_object(const Context& context) {
  return impl_->context_object(context);
}

NatTrans Evaluator::denote(const TermRef& term, const Context& context) {
  const Node* node = impl_->compile(impl_->prepare(term, context));
  const ProductCone& gamma = context_object(context);
  const FinCategory& cat = *impl_->cat;
  std::vector<std::vector<Elem>> components(cat.object_count());
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    const std::size_t size = gamma.object->size(c);
    components[c].resize(size);
    for (Elem g = 0; g < size; ++g) {
      const std::vector<Elem> coords = gamma.decode(c, g);
      components[c][g] = impl_->value(node, c, impl_->make_env(context, coords));
    }
  }
  return NatTrans(gamma.object, node->type->object(), std::move(components));
}

NatTrans Evaluator::denote(std::string_view term, const Context& context) {
  return denote(parse_formula(term), context);
}

Truth Evaluator::holds(const TermRef& formula) {
  const TermRef typed = typecheck(formula, impl_->sig);
  if (typed->type->kind != K::Omega) {
    throw SyntaxError(ErrorCode::TypeMismatch, formula->pos,
                      "formula has type " + to_string(typed->type));
  }
  const NatTrans value = denote(formula);
  bool all_top = true;
  std::vector<Elem> stages;
  for (ObjectId c = 0; c < impl_->cat->object_count(); ++c) {
    stages.push_back(value(c, 0));
    all_top = all_top && impl_->omega->is_top(c, stages.back());
  }
  return {all_top, impl_->omega->truth_value(std::move(stages))};
}

Truth Evaluator::holds(std::string_view formula) { return holds(parse_formula(formula)); }

bool Evaluator::forced(const TermRef& formula, ObjectId stage, const Context& context,
                       std::span<const Elem> values) {
  return forced(prepare(formula, context), stage, values);
}

Evaluator::Handle Evaluator::prepare(const TermRef& formula, const Context& context) {
  const TermRef typed = impl_->prepare(formula, context);
  if (typed->type->kind != K::Omega) {
    throw SyntaxError(ErrorCode::TypeMismatch, formula->pos,
                      "formula has type " + to_string(typed->type));
  }
  impl_->prepared.emplace_back(impl_->compile(typed), context);
  return impl_->prepared.size() - 1;
}

bool Evaluator::forced(Handle formula, ObjectId stage, std::span<const Elem> values) {
  const auto& [node, context] = impl_->prepared.at(formula);
  return impl_->forced(node, stage, impl_->make_env(context, values));
}

NatTrans subobject_name(const Subfunctor& s, const Exponential& power, const OmegaStructure& omega) {
  const NatTrans chi = omega.classify(s);
  const ProductCone domain = product(omega.terminal_object(), power.exponent());
  return power.transpose(compose(chi, domain.projections[1]), domain);
}

}  // namespace toposbench::logic
