#include "toposbench/logic/typecheck.hpp"

#include <unordered_map>

#include "toposbench/error.hpp"

namespace toposbench::logic {

void Signature::bind_ground(const std::string& name, PresheafRef object) {
  if (!base) base = object->base();
  if (!same_base(base, object->base())) {
    throw Error(ErrorCode::BaseMismatch, "ground type '" + name + "' lives over another base");
  }
  grounds[name] = std::move(object);
}

void Signature::bind_function(const std::string& name, TypeRef domain, TypeRef codomain,
                              NatTrans map) {
  functions[name] = {std::move(domain), std::move(codomain),
                     std::make_shared<const NatTrans>(std::move(map))};
}

void Signature::bind_constant(const std::string& name, TypeRef type, NatTrans element) {
  constants[name] = {std::move(type), std::make_shared<const NatTrans>(std::move(element))};
}

namespace {

using K = LType::Kind;

class Checker {
 public:
  Checker(const Signature& sig, const Context& context) : sig_(sig) {
    for (const auto& [name, type] : context) {
      check_type(type, 0);
      scope_.emplace_back(name, type);
    }
  }

  TermRef check(const TermRef& t) {
    // Expansion shares subterms; binders it introduces are fresh, so a shared
    // subterm resolves identically wherever it occurs.
    const auto key = std::make_pair(t.get(), scope_.size());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    TermRef out = check_uncached(*t);
    memo_.emplace(key, out);
    return out;
  }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<const Term*, std::size_t>& p) const {
      return std::hash<const void*>()(p.first) * 31 + p.second;
    }
  };

  [[noreturn]] void mismatch(const Term& t, const std::string& message) const {
    throw SyntaxError(ErrorCode::TypeMismatch, t.pos,
                      message + " in subterm " + to_string(t));
  }

  void check_type(const TypeRef& type, std::size_t pos) const {
    if (type->kind == K::Ground && !sig_.grounds.count(type->name)) {
      throw SyntaxError(ErrorCode::UnboundGround, pos, "unbound ground type '" + type->name + "'");
    }
    for (const auto& arg : type->args) check_type(arg, pos);
  }

  static std::shared_ptr<Term> copy(const Term& t, TypeRef type) {
    auto out = std::make_shared<Term>(t);
    out->type = std::move(type);
    return out;
  }

  TermRef expect(const TermRef& t, const TypeRef& type, const char* role) {
    TermRef typed = check(t);
    if (!type_equal(typed->type, type)) {
      mismatch(*t, std::string(role) + " has type " + to_string(typed->type) + ", expected " +
                       to_string(type));
    }
    return typed;
  }

  TermRef binder(const Term& t, TypeRef result) {
    check_type(t.binder_type, t.pos);
    scope_.emplace_back(t.name, t.binder_type);
    TermRef body = expect(t.args[0], LType::omega(), "body");
    scope_.pop_back();
    auto out = copy(t, std::move(result));
    out->index = scope_.size();
    out->args = {body};
    return out;
  }

  std::optional<std::size_t> lookup(const std::string& name) const {
    for (std::size_t i = scope_.size(); i > 0; --i) {
      if (scope_[i - 1].first == name) return i - 1;
    }
    return std::nullopt;
  }

  TermRef check_uncached(const Term& t) {
    switch (t.op) {
      case Op::Star: return copy(t, LType::unit());
      case Op::True:
      case Op::False:
        return copy(t, LType::omega());
      case Op::Var: {
        if (const auto level = lookup(t.name)) {
          auto out = copy(t, scope_[*level].second);
          out->index = *level;
          return out;
        }
        if (const auto it = sig_.constants.find(t.name); it != sig_.constants.end()) {
          auto out = copy(t, it->second.type);
          out->op = Op::Const;
          return out;
        }
        if (sig_.grounds.count(t.name)) {
          auto out = copy(t, LType::power(LType::ground(t.name)));
          out->op = Op::TypeSet;
          return out;
        }
        if (sig_.functions.count(t.name)) {
          mismatch(t, "function symbol '" + t.name + "' must be applied");
        }
        throw SyntaxError(ErrorCode::UnknownSymbol, t.pos, "unknown symbol '" + t.name + "'");
      }
      case Op::Const:
      case Op::TypeSet:
      case Op::App:
      case Op::ExpApply:
        // Already resolved; re-check arguments only.
        return recheck_resolved(t);
      case Op::Call: {
        const Term& callee = *t.args[0];
        if (callee.op == Op::Var && !lookup(callee.name)) {
          const auto it = sig_.functions.find(callee.name);
          if (it != sig_.functions.end()) {
            TermRef arg = expect(t.args[1], it->second.domain, "argument");
            auto out = copy(t, it->second.codomain);
            out->op = Op::App;
            out->name = callee.name;
            out->args = {arg};
            return out;
          }
        }
        TermRef fn = check(t.args[0]);
        if (fn->type->kind != K::Exp) {
          mismatch(t, "applied term has type " + to_string(fn->type) + ", not a function type");
        }
        TermRef arg = expect(t.args[1], fn->type->args[0], "argument");
        auto out = copy(t, fn->type->args[1]);
        out->op = Op::ExpApply;
        out->args = {fn, arg};
        return out;
      }
      case Op::Tuple: {
        std::vector<TermRef> items;
        std::vector<TypeRef> types;
        for (const auto& a : t.args) {
          items.push_back(check(a));
          types.push_back(items.back()->type);
        }
        auto out = copy(t, LType::product(std::move(types)));
        out->args = std::move(items);
        return out;
      }
      case Op::Proj: {
        TermRef inner = check(t.args[0]);
        if (inner->type->kind != K::Product || t.index == 0 || t.index > inner->type->args.size()) {
          mismatch(t, "projection pi" + std::to_string(t.index) + " of type " +
                          to_string(inner->type));
        }
        auto out = copy(t, inner->type->args[t.index - 1]);
        out->args = {inner};
        return out;
      }
      case Op::Comprehension: return binder(t, LType::power(t.binder_type));
      case Op::Forall:
      case Op::Exists:
        return binder(t, LType::omega());
      case Op::Eq:
      case Op::Iff: {
        TermRef left = check(t.args[0]);
        TermRef right = check(t.args[1]);
        if (!type_equal(left->type, right->type)) {
          mismatch(t, "sides have types " + to_string(left->type) + " and " +
                          to_string(right->type));
        }
        if (t.op == Op::Iff && left->type->kind != K::Omega) {
          mismatch(t, "<=> needs formulas");
        }
        auto out = copy(t, LType::omega());
        out->args = {left, right};
        return out;
      }
      case Op::Mem: {
        TermRef element = check(t.args[0]);
        TermRef set = check(t.args[1]);
        if (set->type->kind != K::Power || !type_equal(set->type->args[0], element->type)) {
          mismatch(t, "membership of " + to_string(element->type) + " in " +
                          to_string(set->type));
        }
        auto out = copy(t, LType::omega());
        out->args = {element, set};
        return out;
      }
      case Op::And:
      case Op::Or:
      case Op::Implies: {
        auto out = copy(t, LType::omega());
        out->args = {expect(t.args[0], LType::omega(), "operand"),
                     expect(t.args[1], LType::omega(), "operand")};
        return out;
      }
      case Op::Not: {
        auto out = copy(t, LType::omega());
        out->args = {expect(t.args[0], LType::omega(), "operand")};
        return out;
      }
      case Op::Subset:
      case Op::Union:
      case Op::Inter: {
        TermRef left = check(t.args[0]);
        TermRef right = check(t.args[1]);
        if (left->type->kind != K::Power || !type_equal(left->type, right->type)) {
          mismatch(t, "set operation on " + to_string(left->type) + " and " +
                          to_string(right->type));
        }
        auto out = copy(t, t.op == Op::Subset ? LType::omega() : left->type);
        out->args = {left, right};
        return out;
      }
      case Op::Empty:
        check_type(t.binder_type, t.pos);
        return copy(t, LType::power(t.binder_type));
      case Op::Identity:
        check_type(t.binder_type, t.pos);
        return copy(t, LType::exp(t.binder_type, t.binder_type));
      case Op::Compose: {
        TermRef f = check(t.args[0]);
        TermRef g = check(t.args[1]);
        if (f->type->kind != K::Exp || g->type->kind != K::Exp ||
            !type_equal(g->type->args[1], f->type->args[0])) {
          mismatch(t, "cannot compose " + to_string(f->type) + " after " + to_string(g->type));
        }
        auto out = copy(t, LType::exp(g->type->args[0], f->type->args[1]));
        out->args = {f, g};
        return out;
      }
    }
    mismatch(t, "unsupported term");
  }

  TermRef recheck_resolved(const Term& t) {
    switch (t.op) {
      case Op::Const: {
        const auto it = sig_.constants.find(t.name);
        if (it == sig_.constants.end()) {
          throw SyntaxError(ErrorCode::UnknownSymbol, t.pos, "unknown symbol '" + t.name + "'");
        }
        return copy(t, it->second.type);
      }
      case Op::TypeSet: {
        if (!sig_.grounds.count(t.name)) {
          throw SyntaxError(ErrorCode::UnboundGround, t.pos, "unbound ground type '" + t.name + "'");
        }
        return copy(t, LType::power(LType::ground(t.name)));
      }
      case Op::App: {
        const auto it = sig_.functions.find(t.name);
        if (it == sig_.functions.end()) {
          throw SyntaxError(ErrorCode::UnknownSymbol, t.pos, "unknown symbol '" + t.name + "'");
        }
        auto out = copy(t, it->second.codomain);
        out->args = {expect(t.args[0], it->second.domain, "argument")};
        return out;
      }
      default: {
        TermRef fn = check(t.args[0]);
        if (fn->type->kind != K::Exp) mismatch(t, "applied term is not a function");
        auto out = copy(t, fn->type->args[1]);
        out->args = {fn, expect(t.args[1], fn->type->args[0], "argument")};
        return out;
      }
    }
  }

  const Signature& sig_;
  std::vector<std::pair<std::string, TypeRef>> scope_;
  std::unordered_map<std::pair<const Term*, std::size_t>, TermRef, PairHash> memo_;
};

class Expander {
 public:
  TermRef run(const TermRef& t) {
    if (auto it = memo_.find(t.get()); it != memo_.end()) return it->second;
    TermRef out = expand_uncached(*t);
    memo_.emplace(t.get(), out);
    return out;
  }

 private:
  std::string fresh(const char* stem) { return std::string("%") + stem + std::to_string(++counter_); }

  TermRef truth() {
    if (!truth_) {
      truth_ = make_term(Op::Eq, 0, {make_term(Op::Star, 0), make_term(Op::Star, 0)});
    }
    return truth_;
  }

  TermRef conj(TermRef p, TermRef q) {
    return make_term(Op::Eq, 0,
                     {make_term(Op::Tuple, 0, {std::move(p), std::move(q)}),
                      make_term(Op::Tuple, 0, {truth(), truth()})});
  }

  TermRef impl(TermRef p, TermRef q) { return make_term(Op::Eq, 0, {conj(p, std::move(q)), p}); }

  TermRef all(const std::string& x, const TypeRef& type, TermRef body) {
    return make_term(Op::Eq, 0,
                     {make_binder(Op::Comprehension, x, type, std::move(body)),
                      make_binder(Op::Comprehension, x, type, truth())});
  }

  TermRef falsity() {
    if (!false_) {
      const std::string w = fresh("w");
      false_ = all(w, LType::omega(), make_var(w));
    }
    return false_;
  }

  TermRef expand_uncached(const Term& t) {
    auto rebuild = [&](const Term& src) {
      auto out = std::make_shared<Term>(src);
      out->type = nullptr;
      for (auto& a : out->args) a = run(a);
      return TermRef(out);
    };
    switch (t.op) {
      case Op::True: return truth();
      case Op::False: return falsity();
      case Op::And: return conj(run(t.args[0]), run(t.args[1]));
      case Op::Implies: return impl(run(t.args[0]), run(t.args[1]));
      case Op::Iff: return make_term(Op::Eq, t.pos, {run(t.args[0]), run(t.args[1])});
      case Op::Not: return impl(run(t.args[0]), falsity());
      case Op::Forall: return all(t.name, t.binder_type, run(t.args[0]));
      case Op::Exists: {
        const std::string w = fresh("w");
        TermRef inner = all(t.name, t.binder_type, impl(run(t.args[0]), make_var(w)));
        return all(w, LType::omega(), impl(inner, make_var(w)));
      }
      case Op::Or: {
        const std::string w = fresh("w");
        TermRef p = impl(run(t.args[0]), make_var(w));
        TermRef q = impl(run(t.args[1]), make_var(w));
        return all(w, LType::omega(), impl(conj(p, q), make_var(w)));
      }
      case Op::Subset: {
        const TypeRef element = t.args[0]->type->args[0];
        const std::string x = fresh("x");
        return all(x, element,
                   impl(make_term(Op::Mem, 0, {make_var(x), run(t.args[0])}),
                        make_term(Op::Mem, 0, {make_var(x), run(t.args[1])})));
      }
      case Op::Union:
      case Op::Inter: {
        const TypeRef element = t.args[0]->type->args[0];
        const std::string x = fresh("x");
        TermRef left = make_term(Op::Mem, 0, {make_var(x), run(t.args[0])});
        TermRef right = make_term(Op::Mem, 0, {make_var(x), run(t.args[1])});
        TermRef body;
        if (t.op == Op::Inter) {
          body = conj(left, right);
        } else {
          const std::string w = fresh("w");
          body = all(w, LType::omega(),
                     impl(conj(impl(left, make_var(w)), impl(right, make_var(w))), make_var(w)));
        }
        return make_binder(Op::Comprehension, x, element, body);
      }
      case Op::Empty: {
        const std::string x = fresh("x");
        return make_binder(Op::Comprehension, x, t.binder_type, falsity());
      }
      case Op::TypeSet: {
        const std::string x = fresh("x");
        return make_binder(Op::Comprehension, x, t.type->args[0], truth());
      }
      default:
        return rebuild(t);
    }
  }

  std::unordered_map<const Term*, TermRef> memo_;
  TermRef truth_;
  TermRef false_;
  int counter_ = 0;
};

}  // namespace

TermRef typecheck(const TermRef& term, const Signature& sig, const Context& context) {
  return Checker(sig, context).check(term);
}

TermRef expand(const TermRef& typed) { return Expander().run(typed); }

TermRef elaborate(const TermRef& term, const Signature& sig, const Context& context) {
  return typecheck(expand(typecheck(term, sig, context)), sig, context);
}

}  // namespace toposbench::logic
