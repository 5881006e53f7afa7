#include "toposbench/machines/tm.hpp"

#include <algorithm>

#include "toposbench/enumerate.hpp"
#include "toposbench/error.hpp"
#include "toposbench/omega.hpp"

namespace toposbench::machines {

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

char read_cell(const Configuration& c, std::int64_t pos, char blank) {
  const std::int64_t i = pos - c.offset;
  return i < 0 || i >= static_cast<std::int64_t>(c.cells.size()) ? blank : c.cells[static_cast<std::size_t>(i)];
}

void write_cell(Configuration& c, std::int64_t pos, char symbol, char blank) {
  if (c.cells.empty()) {
    if (symbol != blank) {
      c.offset = pos;
      c.cells.assign(1, symbol);
    }
    return;
  }
  if (pos < c.offset) {
    if (symbol == blank) return;
    c.cells.insert(0, static_cast<std::size_t>(c.offset - pos), blank);
    c.offset = pos;
  }
  const auto i = static_cast<std::size_t>(pos - c.offset);
  if (i >= c.cells.size()) {
    if (symbol == blank) return;
    c.cells.resize(i + 1, blank);
  }
  c.cells[i] = symbol;
  if (symbol != blank) return;
  const auto first = c.cells.find_first_not_of(blank);
  if (first == std::string::npos) {
    c.cells.clear();
    c.offset = 0;
    return;
  }
  c.cells.erase(c.cells.find_last_not_of(blank) + 1);
  c.cells.erase(0, first);
  c.offset += static_cast<std::int64_t>(first);
}

void validate_tm(const TMSpec& tm) {
  for (const auto& s : tm.alphabet) {
    if (s.size() != 1) throw Error(ErrorCode::MalformedInput, "symbol '" + s + "' is not a single character");
  }
  if (!contains(tm.states, tm.q0)) throw Error(ErrorCode::MalformedInput, "q0 is not a state");
  if (!contains(tm.states, tm.qf)) throw Error(ErrorCode::MalformedInput, "qf is not a state");
  if (!contains(tm.alphabet, tm.blank)) {
    throw Error(ErrorCode::MalformedInput, "the blank must belong to the alphabet");
  }
  for (const auto& [key, rules] : tm.delta) {
    if (!contains(tm.states, key.first) || !contains(tm.alphabet, key.second)) {
      throw Error(ErrorCode::MalformedInput,
                  "delta key (" + key.first + ", " + key.second + ") is outside Q x Sigma");
    }
    for (const auto& r : rules) {
      if (!contains(tm.states, r.state) || !contains(tm.alphabet, r.symbol)) {
        throw Error(ErrorCode::MalformedInput,
                    "delta image (" + r.state + ", " + r.symbol + ") is outside Q x Sigma");
      }
    }
  }
}

bool is_deterministic(const TMSpec& tm) {
  return std::all_of(tm.delta.begin(), tm.delta.end(),
                     [](const auto& entry) { return entry.second.size() <= 1; });
}

Configuration initial_configuration(const TMSpec& tm, const std::string& word) {
  Configuration c{tm.q0, 0, 0, word};
  for (const char ch : word) {
    const std::string symbol(1, ch);
    if (symbol == tm.blank || !contains(tm.alphabet, symbol)) {
      throw Error(ErrorCode::MalformedInput, "input symbol '" + symbol + "' is not allowed");
    }
  }
  return c;
}

std::string tape_word(const TMSpec&, const Configuration& c) { return c.cells; }

ConfigSet tm_step(const TMSpec& tm, const Configuration& c) {
  const char blank = tm.blank.at(0);
  ConfigSet out;
  const auto rules = tm.delta.find({c.state, std::string(1, read_cell(c, c.head, blank))});
  if (rules == tm.delta.end()) return out;
  for (const auto& r : rules->second) {
    Configuration next = c;
    next.state = r.state;
    write_cell(next, c.head, r.symbol.at(0), blank);
    next.head += r.move == Move::R ? 1 : -1;
    out.insert(std::move(next));
  }
  return out;
}

ClosureResult tm_closure(const TMSpec& tm, const ConfigSet& init, std::size_t budget) {
  ClosureResult out;
  std::vector<const Configuration*> frontier;
  for (const auto& c : init) {
    if (out.configs.size() >= budget) {
      out.budget_exhausted = true;
      return out;
    }
    frontier.push_back(&*out.configs.insert(c).first);
  }
  // S_{k+1} = S_k u f(S_k), applied to the newly added layer only.
  while (!frontier.empty()) {
    std::vector<const Configuration*> next;
    for (const Configuration* c : frontier) {
      for (auto& d : tm_step(tm, *c)) {
        if (out.configs.count(d)) continue;
        if (out.configs.size() >= budget) {
          out.budget_exhausted = true;
          return out;
        }
        next.push_back(&*out.configs.insert(std::move(d)).first);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

ComputedRelation tm_computed_relation(const TMSpec& tm, const std::vector<std::string>& inputs,
                                      std::size_t budget) {
  ComputedRelation out;
  for (const auto& x : inputs) {
    const ClosureResult closure = tm_closure(tm, {initial_configuration(tm, x)}, budget);
    if (closure.budget_exhausted) out.exhausted_inputs.push_back(x);
    for (const auto& c : closure.configs) {
      if (c.state == tm.qf) out.pairs.emplace(x, tape_word(tm, c));
    }
  }
  return out;
}

TMSpec stage_machine(const StagewiseTM& tm, ObjectId stage) {
  TMSpec out;
  for (Elem q = 0; q < tm.states->size(stage); ++q) out.states.push_back(tm.states->element_name(stage, q));
  for (Elem s = 0; s < tm.alphabet->size(stage); ++s) {
    out.alphabet.push_back(tm.alphabet->element_name(stage, s));
  }
  out.blank = out.alphabet.at(tm.blank.at(stage));
  out.q0 = out.states.at(tm.q0.at(stage));
  out.qf = out.states.at(tm.qf.at(stage));
  out.fin = tm.fin;
  validate_tm(out);
  for (const auto& [key, targets] : tm.delta.at(stage)) {
    auto& rules = out.delta[{out.states.at(key.first), out.alphabet.at(key.second)}];
    for (const auto& [q, s, move] : targets) rules.push_back({out.states.at(q), out.alphabet.at(s), move});
  }
  return out;
}

namespace {

void check_global(const Presheaf& p, const std::vector<Elem>& element, const char* what) {
  const FinCategory& cat = *p.base();
  if (element.size() != cat.object_count()) {
    throw Error(ErrorCode::MalformedInput, std::string(what) + " needs one entry per stage");
  }
  for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
    if (p.act(f, element[cat.dom(f)]) != element[cat.cod(f)]) {
      throw Error(ErrorCode::EquivarianceViolation,
                  std::string(what) + " is not natural along " + cat.arrow(f).name);
    }
  }
}

bool fin_verdict(const PresheafRef& object, const finiteness::FinitenessNotion& fin) {
  using Tag = finiteness::FinitenessNotion::Tag;
  switch (fin.tag) {
    case Tag::Dedekind: return finiteness::dedekind(object, fin.mode).verdict;
    case Tag::Kuratowski: return finiteness::kuratowski(object).verdict;
    case Tag::Lp: return finiteness::squire_lp(object, fin.p).verdict;
  }
  return false;
}

Configuration move_config(const StagewiseTM& tm, const TMSpec& from, const TMSpec& to, ArrowId f,
                          const Configuration& c) {
  auto state_index = [&](const std::string& name) {
    return static_cast<Elem>(std::find(from.states.begin(), from.states.end(), name) - from.states.begin());
  };
  auto symbol_index = [&](const std::string& name) {
    return static_cast<Elem>(std::find(from.alphabet.begin(), from.alphabet.end(), name) -
                             from.alphabet.begin());
  };
  Configuration out{to.states[tm.states->act(f, state_index(c.state))], c.head, 0, {}};
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    const std::string& moved = to.alphabet[tm.alphabet->act(f, symbol_index(std::string(1, c.cells[i])))];
    write_cell(out, c.offset + static_cast<std::int64_t>(i), moved.at(0), to.blank.at(0));
  }
  return out;
}

}  // namespace

InternalDemoReport tm_internal_demo(const StagewiseTM& tm, std::size_t budget) {
  const FinCategory& cat = *tm.states->base();
  if (!same_base(tm.states->base(), tm.alphabet->base())) {
    throw Error(ErrorCode::BaseMismatch, "states and alphabet live over different bases");
  }
  check_global(*tm.states, tm.q0, "q0");
  check_global(*tm.states, tm.qf, "qf");
  check_global(*tm.alphabet, tm.blank, "blank");
  if (tm.delta.size() != cat.object_count()) {
    throw Error(ErrorCode::MalformedInput, "delta needs one table per stage");
  }
  for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
    const ObjectId c = cat.dom(f);
    const ObjectId d = cat.cod(f);
    for (Elem q = 0; q < tm.states->size(c); ++q) {
      for (Elem s = 0; s < tm.alphabet->size(c); ++s) {
        std::set<std::tuple<Elem, Elem, Move>> moved;
        if (const auto it = tm.delta[c].find({q, s}); it != tm.delta[c].end()) {
          for (const auto& [q2, s2, m] : it->second) {
            moved.emplace(tm.states->act(f, q2), tm.alphabet->act(f, s2), m);
          }
        }
        std::set<std::tuple<Elem, Elem, Move>> there;
        if (const auto it = tm.delta[d].find({tm.states->act(f, q), tm.alphabet->act(f, s)});
            it != tm.delta[d].end()) {
          there = it->second;
        }
        if (moved != there) {
          throw Error(ErrorCode::EquivarianceViolation,
                      "delta is not natural along " + cat.arrow(f).name + " at (" +
                          tm.states->element_name(c, q) + ", " + tm.alphabet->element_name(c, s) + ")");
        }
      }
    }
  }

  InternalDemoReport report;
  report.fin = tm.fin.name() + "/" + std::string(finiteness::mode_name(tm.fin.mode));
  report.states_finite = fin_verdict(tm.states, tm.fin);
  report.alphabet_finite = fin_verdict(tm.alphabet, tm.fin);

  std::vector<TMSpec> machines;
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    machines.push_back(stage_machine(tm, c));
    report.closures.push_back(
        tm_closure(machines.back(), {initial_configuration(machines.back(), "")}, budget));
  }
  report.closures_natural = true;
  for (ArrowId f = 0; f < cat.arrow_count() && report.closures_natural; ++f) {
    const ObjectId c = cat.dom(f);
    const ObjectId d = cat.cod(f);
    if (report.closures[c].budget_exhausted || report.closures[d].budget_exhausted) continue;
    for (const auto& config : report.closures[c].configs) {
      if (!report.closures[d].configs.count(move_config(tm, machines[c], machines[d], f, config))) {
        report.closures_natural = false;
        report.notes.push_back("closure is not action-closed along " + cat.arrow(f).name);
        break;
      }
    }
  }

  report.state_global_elements = global_elements(tm.states).size();
  std::size_t subobjects = 0;
  for (const auto& s : enumerate_subfunctors(tm.states)) {
    ++subobjects;
    if (!s.is_empty() && !s.is_full()) ++report.state_proper_subobjects;
  }
  // Classically a set with k elements has exactly 2^k subsets.
  report.internal_external_mismatch =
      report.state_global_elements < 63 && subobjects != (std::size_t{1} << report.state_global_elements);
  if (report.internal_external_mismatch) {
    report.notes.push_back("state object has " + std::to_string(report.state_global_elements) +
                           " global element(s) but " + std::to_string(subobjects) +
                           " subobjects, " + std::to_string(report.state_proper_subobjects) +
                           " of them non-empty and proper");
  }
  return report;
}

}  // namespace toposbench::machines
