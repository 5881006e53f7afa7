#include "toposbench/machines/automaton.hpp"

#include <algorithm>
#include <map>

#include "toposbench/error.hpp"

namespace toposbench::machines {

void validate_automaton(const Automaton& a) {
  if (a.delta.size() != a.alphabet.size()) {
    throw Error(ErrorCode::MalformedInput, "transition table needs one column per letter");
  }
  for (std::size_t l = 0; l < a.delta.size(); ++l) {
    if (a.delta[l].size() != a.states.size()) {
      throw Error(ErrorCode::MalformedInput, "letter '" + a.alphabet[l] + "' is not total");
    }
    for (std::size_t q : a.delta[l]) {
      if (q >= a.states.size()) {
        throw Error(ErrorCode::MalformedInput, "letter '" + a.alphabet[l] + "' leaves the states");
      }
    }
  }
  if (a.initial && *a.initial >= a.states.size()) {
    throw Error(ErrorCode::MalformedInput, "initial state out of range");
  }
  for (std::size_t q : a.finals) {
    if (q >= a.states.size()) throw Error(ErrorCode::MalformedInput, "final state out of range");
  }
}

MSet joint_mset(const std::vector<Automaton>& automata) {
  if (automata.empty()) throw Error(ErrorCode::MalformedInput, "no automata");
  const auto& alphabet = automata.front().alphabet;
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (const auto& a : automata) {
    validate_automaton(a);
    if (a.alphabet != alphabet) throw Error(ErrorCode::MalformedInput, "alphabets differ");
    offsets.push_back(total);
    total += a.states.size();
  }
  using Fn = std::vector<std::size_t>;
  std::vector<Fn> letters(alphabet.size(), Fn(total));
  for (std::size_t k = 0; k < automata.size(); ++k) {
    for (std::size_t l = 0; l < alphabet.size(); ++l) {
      for (std::size_t q = 0; q < automata[k].states.size(); ++q) {
        letters[l][offsets[k] + q] = offsets[k] + automata[k].delta[l][q];
      }
    }
  }
  bool short_letters = true;
  for (const auto& s : alphabet) short_letters = short_letters && s.size() == 1;

  // Breadth-first over words in shortlex order.
  Fn unit(total);
  for (std::size_t q = 0; q < total; ++q) unit[q] = q;
  std::vector<Fn> elements{unit};
  std::vector<std::string> names{"1"};
  std::map<Fn, std::size_t> index{{unit, 0}};
  std::vector<std::vector<std::size_t>> right(1, std::vector<std::size_t>(alphabet.size()));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t l = 0; l < alphabet.size(); ++l) {
      Fn next(total);
      for (std::size_t q = 0; q < total; ++q) next[q] = letters[l][elements[i][q]];
      auto [it, fresh] = index.emplace(next, elements.size());
      if (fresh) {
        const std::string prefix = i == 0 ? std::string() : names[i] + (short_letters ? "" : ".");
        elements.push_back(next);
        names.push_back(prefix + alphabet[l]);
        right.emplace_back(alphabet.size());
      }
      right[i][l] = it->second;
    }
  }
  const std::size_t n = elements.size();
  std::vector<std::size_t> table(n * n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      Fn composed(total);
      for (std::size_t q = 0; q < total; ++q) composed[q] = elements[k][elements[m][q]];
      table[m * n + k] = index.at(composed);
    }
  }
  MSet out{FinMonoid(names, 0, table), nullptr, {}, {}};
  out.base = monoid_to_category(out.monoid);
  for (std::size_t l = 0; l < alphabet.size(); ++l) out.letters.push_back(index.at(letters[l]));
  for (std::size_t k = 0; k < automata.size(); ++k) {
    std::vector<std::vector<Elem>> action(n);
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t q = 0; q < automata[k].states.size(); ++q) {
        action[m].push_back(static_cast<Elem>(elements[m][offsets[k] + q] - offsets[k]));
      }
    }
    out.parts.push_back(make_presheaf(out.base, std::vector<std::vector<std::string>>{automata[k].states},
                                      std::move(action)));
  }
  return out;
}

MSet automaton_to_mset(const Automaton& a) { return joint_mset({a}); }

Automaton four_state_automaton() {
  Automaton a;
  a.states = {"q1", "q2", "q3", "q4"};
  a.alphabet = {"a", "b", "c"};
  a.delta = {{1, 3, 3, 3}, {1, 2, 2, 3}, {2, 1, 1, 3}};
  a.initial = 0;
  a.finals = {3};
  return a;
}

Automaton probe_automaton(std::size_t states) {
  Automaton b;
  b.alphabet = {"a", "b", "c"};
  switch (states) {
    case 1:
      b.states = {"X"};
      b.delta = {{0}, {0}, {0}};
      break;
    case 2:
      b.states = {"X", "Y"};
      b.delta = {{0, 0}, {0, 0}, {0, 1}};
      break;
    case 3:
      b.states = {"X", "Y", "Z"};
      b.delta = {{0, 0, 0}, {0, 2, 2}, {0, 1, 1}};
      break;
    default:
      throw Error(ErrorCode::MalformedInput, "probes have 1 to 3 states");
  }
  return b;
}

FinMonoid powerset_union_monoid(std::size_t n) {
  if (n == 0 || n > 8) throw Error(ErrorCode::MalformedInput, "n must lie in 1..8");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::string> names;
  for (std::size_t mask = 0; mask < size; ++mask) {
    std::string name = "{";
    for (std::size_t k = 0; k < n; ++k) {
      if (mask >> k & 1) name += (name.size() > 1 ? "," : "") + std::to_string(k + 1);
    }
    names.push_back(name + "}");
  }
  std::vector<std::size_t> table(size * size);
  for (std::size_t m = 0; m < size; ++m) {
    for (std::size_t k = 0; k < size; ++k) table[m * size + k] = m | k;
  }
  return FinMonoid(names, 0, table);
}

PresheafRef truncated_free_action(std::size_t n) {
  const FinMonoid m = powerset_union_monoid(n);
  const CategoryRef base = monoid_to_category(m);
  std::vector<std::string> carrier;
  for (std::size_t k = 1; k <= n; ++k) carrier.push_back("a" + std::to_string(k));
  for (std::size_t k = 1; k <= n; ++k) carrier.push_back("b" + std::to_string(k));
  std::vector<std::vector<Elem>> action(m.size());
  for (std::size_t t = 0; t < m.size(); ++t) {
    for (std::size_t k = 0; k < n; ++k) action[t].push_back(static_cast<Elem>(t >> k & 1 ? n + k : k));
    for (std::size_t k = 0; k < n; ++k) action[t].push_back(static_cast<Elem>(n + k));
  }
  return make_presheaf(base, std::vector<std::vector<std::string>>{carrier}, std::move(action));
}

FinMonoid chain_monoid(std::size_t p) {
  if (p == 0) throw Error(ErrorCode::MalformedInput, "p must be at least 1");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= p; ++i) names.push_back(std::to_string(i));
  std::vector<std::size_t> table(p * p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) table[i * p + j] = std::max(i, j);
  }
  return FinMonoid(names, 0, table);
}

}  // namespace toposbench::machines
