#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toposbench/presheaf.hpp"

namespace toposbench::cli {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::filesystem::path fixtures;  // directory of model files; empty skips them
  std::size_t random_objects = 100;
  std::size_t max_stage = 3;
  // "heyting" corrupts every implication table before it is certified.
  std::string inject;
};

struct SuiteFailure {
  std::string property;
  std::string instance;
  std::string detail;
};

struct SuiteReport {
  std::map<std::string, std::size_t> checks;  // property -> instances checked
  std::vector<std::string> notes;             // soft findings, not failures
  std::optional<SuiteFailure> failure;        // first hard failure
  bool passed() const { return !failure; }
};

struct NamedObject {
  std::string name;
  PresheafRef object;
  PresheafRef partner;  // same base; the object itself when null
};

// Bases for random objects: the trivial category, the arrow category and
// every monoid of order 2 and 3.
std::vector<CategoryRef> suite_bases();

// count presheaves drawn with stages of at most max_stage elements, each
// with a partner over the same base; the same seed gives the same objects.
std::vector<NamedObject> random_presheaves(std::uint64_t seed, std::size_t count,
                                           std::size_t max_stage);

// Product, coproduct, equalizer, pullback and exponential universal
// properties, Omega, and the Heyting laws of the subobject lattice of p.
// Binary constructions pair p with its partner.
std::optional<SuiteFailure> certify_structure(const NamedObject& p,
                                              std::map<std::string, std::size_t>& counts,
                                              const std::string& inject = {});

// Every presheaf in every model file of dir, in file and name order.
std::vector<NamedObject> fixture_presheaves(const std::filesystem::path& dir);

SuiteReport run_suite(const SuiteOptions& options);

}  // namespace toposbench::cli
