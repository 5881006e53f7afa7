#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "toposbench/logic/ast.hpp"
#include "toposbench/presheaf.hpp"

namespace toposbench::logic {

// Interpretation of ground types, function symbols and constants.
struct Signature {
  struct Function {
    TypeRef domain;
    TypeRef codomain;
    std::shared_ptr<const NatTrans> map;
  };
  struct Constant {
    TypeRef type;
    std::shared_ptr<const NatTrans> element;  // from the terminal presheaf
  };

  CategoryRef base;
  std::map<std::string, PresheafRef> grounds;
  std::map<std::string, Function> functions;
  std::map<std::string, Constant> constants;

  void bind_ground(const std::string& name, PresheafRef object);
  void bind_function(const std::string& name, TypeRef domain, TypeRef codomain, NatTrans map);
  void bind_constant(const std::string& name, TypeRef type, NatTrans element);
};

using Context = std::vector<std::pair<std::string, TypeRef>>;

// Annotates every subterm with its type and resolves identifiers: bound
// variables get their level (context first, then binders by depth).
TermRef typecheck(const TermRef& term, const Signature& sig, const Context& context = {});

// Rewrites derived forms into Star/Var/App/Const/Tuple/Proj/Comprehension/
// Eq/Mem/ExpApply/Compose/Identity using these abbreviations:
//   true := * = *;  p /\ q := (p, q) = (true, true);  p => q := (p /\ q) = p;
//   forall x.p := {x | p} = {x | true};  false := forall w:Omega. w;
//   ~p := p => false;  exists x.p := forall w. (forall x. (p => w)) => w;
//   p \/ q := forall w. ((p => w) /\ (q => w)) => w.
// The input must be typed; the result is untyped and must be re-checked.
TermRef expand(const TermRef& typed);

// typecheck(expand(typecheck(term))).
TermRef elaborate(const TermRef& term, const Signature& sig, const Context& context = {});

}  // namespace toposbench::logic
