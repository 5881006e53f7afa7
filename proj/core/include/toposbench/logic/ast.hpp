#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace toposbench::logic {

struct LType;
using TypeRef = std::shared_ptr<const LType>;

struct LType {
  enum class Kind { Unit, Omega, Ground, Power, Product, Exp };

  Kind kind;
  std::string name;           // Ground
  std::vector<TypeRef> args;  // Power: {A}; Product: factors; Exp: {A, B} for A -> B

  static TypeRef unit();
  static TypeRef omega();
  static TypeRef ground(std::string name);
  static TypeRef power(TypeRef element);
  static TypeRef product(std::vector<TypeRef> factors);
  static TypeRef exp(TypeRef domain, TypeRef codomain);
};

bool type_equal(const LType& a, const LType& b);
inline bool type_equal(const TypeRef& a, const TypeRef& b) { return type_equal(*a, *b); }
std::string to_string(const LType& t);
inline std::string to_string(const TypeRef& t) { return to_string(*t); }

enum class Op {
  // Primitive term formers.
  Star,
  Var,
  Call,           // args[0] applied to args[1]; resolved by typecheck
  Tuple,
  Proj,           // 1-based index
  Comprehension,  // {name : binder_type | args[0]}
  Eq,
  Mem,
  // Derived forms, kept symbolic until expansion.
  True,
  False,
  And,
  Or,
  Implies,
  Iff,
  Not,
  Forall,
  Exists,
  Subset,
  Union,
  Inter,
  Empty,  // empty[binder_type]
  // Function-type forms.
  Compose,   // args[0] o args[1]
  Identity,  // id[binder_type]
  // Produced by typecheck from Var/Call.
  App,        // function symbol `name` applied to args[0]
  Const,      // nullary symbol `name`
  ExpApply,   // exponential-typed args[0] applied to args[1]
  TypeSet,    // a ground type used as a set-term
};

struct Term;
using TermRef = std::shared_ptr<const Term>;

struct Term {
  Op op;
  std::size_t pos = 0;
  std::string name;     // variable, symbol or binder name
  TypeRef binder_type;  // binder annotation; type argument of Empty/Identity
  std::size_t index = 0;  // Proj index; variable level after typecheck
  std::vector<TermRef> args;
  TypeRef type;  // set by typecheck
};

TermRef make_term(Op op, std::size_t pos, std::vector<TermRef> args = {});
TermRef make_var(std::string name, std::size_t pos = 0);
TermRef make_binder(Op op, std::string name, TypeRef binder_type, TermRef body,
                    std::size_t pos = 0);

std::string to_string(const Term& t);
inline std::string to_string(const TermRef& t) { return to_string(*t); }

bool is_derived(Op op);

}  // namespace toposbench::logic
