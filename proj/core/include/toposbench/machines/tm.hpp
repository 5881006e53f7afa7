#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "toposbench/finiteness/notions.hpp"
#include "toposbench/presheaf.hpp"

namespace toposbench::machines {

enum class Move { L, R };

struct TMRule {
  std::string state;
  std::string symbol;
  Move move;

  auto operator<=>(const TMRule&) const = default;
};

// Symbols are single characters; the blank is reserved and never part of an input.
struct TMSpec {
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  std::string blank = " ";
  std::string q0;
  std::string qf;
  std::map<std::pair<std::string, std::string>, std::vector<TMRule>> delta;
  finiteness::FinitenessNotion fin;
};

// Throws MalformedInput, also for symbols longer than one character.
void validate_tm(const TMSpec& tm);
bool is_deterministic(const TMSpec& tm);

// The tape is the window from the leftmost to the rightmost non-blank cell,
// one character per cell; a blank tape is empty with offset 0.
struct Configuration {
  std::string state;
  std::int64_t head = 0;
  std::int64_t offset = 0;  // position of cells[0]
  std::string cells;

  auto operator<=>(const Configuration&) const = default;
};

char read_cell(const Configuration& c, std::int64_t pos, char blank);
void write_cell(Configuration& c, std::int64_t pos, char symbol, char blank);

using ConfigSet = std::set<Configuration>;

// Tape holding the word from position 0, head on its first cell, state q0.
Configuration initial_configuration(const TMSpec& tm, const std::string& word);
// Cells from the leftmost to the rightmost non-blank cell.
std::string tape_word(const TMSpec& tm, const Configuration& c);

ConfigSet tm_step(const TMSpec& tm, const Configuration& c);

struct ClosureResult {
  ConfigSet configs;
  bool budget_exhausted = false;
};

// Least set containing init and closed under tm_step, computed as a Kleene
// fixpoint; stops and flags once it would exceed `budget` configurations.
ClosureResult tm_closure(const TMSpec& tm, const ConfigSet& init, std::size_t budget);

struct ComputedRelation {
  std::set<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> exhausted_inputs;
};

ComputedRelation tm_computed_relation(const TMSpec& tm, const std::vector<std::string>& inputs,
                                      std::size_t budget);

// A machine whose states and symbols are presheaves, given stage by stage.
struct StagewiseTM {
  PresheafRef states;
  PresheafRef alphabet;
  std::vector<Elem> blank;  // a global element of alphabet, one entry per stage
  std::vector<Elem> q0;
  std::vector<Elem> qf;
  // delta[c] maps (state, symbol) at stage c to its successors.
  std::vector<std::map<std::pair<Elem, Elem>, std::set<std::tuple<Elem, Elem, Move>>>> delta;
  finiteness::FinitenessNotion fin;
};

struct InternalDemoReport {
  std::string fin;
  bool states_finite = false;
  bool alphabet_finite = false;
  std::vector<ClosureResult> closures;  // per stage, from the empty tape
  bool closures_natural = false;
  std::size_t state_global_elements = 0;
  std::size_t state_proper_subobjects = 0;  // non-empty, proper
  bool internal_external_mismatch = false;
  std::vector<std::string> notes;
};

// Throws EquivarianceViolation when delta, q0, qf or blank are not natural.
InternalDemoReport tm_internal_demo(const StagewiseTM& tm, std::size_t budget);

// The classical machine at one stage, named by element names.
TMSpec stage_machine(const StagewiseTM& tm, ObjectId stage);

}  // namespace toposbench::machines
