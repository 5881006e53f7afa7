#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "toposbench/io/model.hpp"
#include "toposbench/machines/tm.hpp"

namespace toposbench::cli {

// automaton.json: the four-state automaton "A" and its probes "B1", "B2",
// "B3" as M-Sets over their joint transition monoid "M".
io::Model automaton_model();

// arrow.json over the arrow category 0 -> 1:
//   X = (empty -> {a}), its full subobject X_sub, I = (empty -> empty),
//   Y = (id: {b1, b2} -> {b1, b2}) and F, G : X -> Y agreeing at 0 and
//   sending a to b1 and b2 respectively.
io::Model arrow_model();

// chain_<p>.json: the chain monoid "M" with "chainM", M acting on itself.
io::Model chain_model(std::size_t p);

// trunc_<n>.json: "C", the truncated free action over 2^[n].
io::Model trunc_model(std::size_t n);

// sets.json: the trivial base with "anySet" = {a, b, c} and "empty".
io::Model sets_model();

machines::TMSpec tm_successor();
machines::TMSpec tm_halt();
machines::TMSpec tm_branch();

// File name -> canonical contents of every shipped fixture.
std::map<std::string, std::string> fixture_corpus();

// Writes the corpus into dir; returns the number of files written.
std::size_t write_fixtures(const std::filesystem::path& dir);

}  // namespace toposbench::cli
