#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toposbench/category.hpp"
#include "toposbench/presheaf.hpp"

namespace toposbench::machines {

struct Automaton {
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  std::vector<std::vector<std::size_t>> delta;  // delta[letter][state]
  std::optional<std::size_t> initial;
  std::vector<std::size_t> finals;
};

// Throws MalformedInput unless delta is a total function.
void validate_automaton(const Automaton& a);

struct MSet {
  FinMonoid monoid;
  CategoryRef base;
  std::vector<PresheafRef> parts;  // one M-Set per automaton
  std::vector<std::size_t> letters;  // monoid element of each letter
};

// Transition monoid of the automaton (word actions, unit = empty word,
// m*n = first m then n), with the states as an M-Set over it. Elements are
// named by their shortlex-least word; the unit is "1".
MSet automaton_to_mset(const Automaton& a);

// The joint transition monoid of automata over a common alphabet, with each
// automaton as an M-Set over it, so that morphisms between them make sense.
MSet joint_mset(const std::vector<Automaton>& automata);

// The four-state automaton over {a, b, c} with states q1..q4.
Automaton four_state_automaton();
// Its one-, two- and three-state probes (states X; X, Y; X, Y, Z).
Automaton probe_automaton(std::size_t states);

// (2^[n], union) with elements named "{}", "{1}", "{1,2}", ...
FinMonoid powerset_union_monoid(std::size_t n);
// {a_1..a_n, b_1..b_n} over powerset_union_monoid(n): T sends a_k to b_k
// when k is in T and fixes everything else.
PresheafRef truncated_free_action(std::size_t n);

// ({1 <= ... <= p}, max, 1)
FinMonoid chain_monoid(std::size_t p);

}  // namespace toposbench::machines
