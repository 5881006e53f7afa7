#include "toposbench/logic/ast.hpp"

namespace toposbench::logic {

TypeRef LType::unit() { return std::make_shared<const LType>(LType{Kind::Unit, "", {}}); }
TypeRef LType::omega() { return std::make_shared<const LType>(LType{Kind::Omega, "", {}}); }
TypeRef LType::ground(std::string name) {
  return std::make_shared<const LType>(LType{Kind::Ground, std::move(name), {}});
}
TypeRef LType::power(TypeRef element) {
  return std::make_shared<const LType>(LType{Kind::Power, "", {std::move(element)}});
}
TypeRef LType::product(std::vector<TypeRef> factors) {
  return std::make_shared<const LType>(LType{Kind::Product, "", std::move(factors)});
}
TypeRef LType::exp(TypeRef domain, TypeRef codomain) {
  return std::make_shared<const LType>(
      LType{Kind::Exp, "", {std::move(domain), std::move(codomain)}});
}

bool type_equal(const LType& a, const LType& b) {
  if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!type_equal(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

namespace {

std::string type_atom(const LType& t) {
  if (t.kind == LType::Kind::Product || t.kind == LType::Kind::Exp) return "(" + to_string(t) + ")";
  return to_string(t);
}

}  // namespace

std::string to_string(const LType& t) {
  switch (t.kind) {
    case LType::Kind::Unit: return "1";
    case LType::Kind::Omega: return "Omega";
    case LType::Kind::Ground: return t.name;
    case LType::Kind::Power: return "P " + type_atom(*t.args[0]);
    case LType::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i > 0) out += " * ";
        out += type_atom(*t.args[i]);
      }
      return out;
    }
    case LType::Kind::Exp: {
      const LType& dom = *t.args[0];
      std::string left = dom.kind == LType::Kind::Exp ? "(" + to_string(dom) + ")" : to_string(dom);
      return left + " -> " + to_string(*t.args[1]);
    }
  }
  return "?";
}

TermRef make_term(Op op, std::size_t pos, std::vector<TermRef> args) {
  auto t = std::make_shared<Term>();
  t->op = op;
  t->pos = pos;
  t->args = std::move(args);
  return t;
}

TermRef make_var(std::string name, std::size_t pos) {
  auto t = std::make_shared<Term>();
  t->op = Op::Var;
  t->pos = pos;
  t->name = std::move(name);
  return t;
}

TermRef make_binder(Op op, std::string name, TypeRef binder_type, TermRef body,
                    std::size_t pos) {
  auto t = std::make_shared<Term>();
  t->op = op;
  t->pos = pos;
  t->name = std::move(name);
  t->binder_type = std::move(binder_type);
  t->args = {std::move(body)};
  return t;
}

bool is_derived(Op op) {
  switch (op) {
    case Op::True:
    case Op::False:
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff:
    case Op::Not:
    case Op::Forall:
    case Op::Exists:
    case Op::Subset:
    case Op::Union:
    case Op::Inter:
    case Op::Empty:
    case Op::TypeSet:
      return true;
    default:
      return false;
  }
}

namespace {

std::string binary(const Term& t, const char* op) {
  return "(" + to_string(*t.args[0]) + " " + op + " " + to_string(*t.args[1]) + ")";
}

}  // namespace

std::string to_string(const Term& t) {
  switch (t.op) {
    case Op::Star: return "*";
    case Op::Var:
    case Op::Const:
    case Op::TypeSet:
      return t.name;
    case Op::Call: return to_string(*t.args[0]) + "(" + to_string(*t.args[1]) + ")";
    case Op::App: return t.name + "(" + to_string(*t.args[0]) + ")";
    case Op::ExpApply: return to_string(*t.args[0]) + "(" + to_string(*t.args[1]) + ")";
    case Op::Tuple: {
      std::string out = "(";
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(*t.args[i]);
      }
      return out + ")";
    }
    case Op::Proj: return "pi" + std::to_string(t.index) + "(" + to_string(*t.args[0]) + ")";
    case Op::Comprehension:
      return "{" + t.name + ":" + to_string(*t.binder_type) + " | " + to_string(*t.args[0]) + "}";
    case Op::Eq: return binary(t, "=");
    case Op::Mem: return binary(t, "in");
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::And: return binary(t, "/\\");
    case Op::Or: return binary(t, "\\/");
    case Op::Implies: return binary(t, "=>");
    case Op::Iff: return binary(t, "<=>");
    case Op::Not: return "~" + to_string(*t.args[0]);
    case Op::Forall:
    case Op::Exists:
      return std::string("(") + (t.op == Op::Forall ? "forall " : "exists ") + t.name + ":" +
             to_string(*t.binder_type) + ". " + to_string(*t.args[0]) + ")";
    case Op::Subset: return binary(t, "subset");
    case Op::Union: return binary(t, "union");
    case Op::Inter: return binary(t, "inter");
    case Op::Empty: return "empty[" + to_string(*t.binder_type) + "]";
    case Op::Compose: return binary(t, "o");
    case Op::Identity: return "id[" + to_string(*t.binder_type) + "]";
  }
  return "?";
}

}  // namespace toposbench::logic
