#pragma once

#include <string_view>

#include "toposbench/logic/ast.hpp"

namespace toposbench::logic {

// ASCII surface syntax:
//   forall x:A. phi   exists x:A. phi   ~ /\ \/ => <=>   true false
//   s = t   s in t   s subset t   s union t   s inter t   f o g
//   {x:A | phi}   (s, t)   pi1(t)   f(t)   *   empty[A]   id[A]
// Types: 1, Omega, ground names, P A, A * B, A -> B, parentheses.
// Throws SyntaxError carrying the byte offset of the problem.
TermRef parse_formula(std::string_view text);
TypeRef parse_type(std::string_view text);

}  // namespace toposbench::logic
