#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toposbench/presheaf.hpp"

namespace toposbench::finiteness {

struct PropertyCheck {
  std::string property;
  std::string instance;
  bool hard = true;  // soft checks are informational
  bool passed = true;
  std::string detail;
};

struct KPropertiesReport {
  std::vector<PropertyCheck> checks;

  // Every hard check passed.
  bool passed() const;
  const PropertyCheck* first_failure() const;
};

// Closure properties of Kuratowski-finiteness on a sample (objects over
// different bases are only combined when the bases agree):
//   epi:        A K-finite, f : A ->> B epi  =>  B K-finite
//   union:      B, C <= X K-finite  =>  B u C K-finite
//   union-conv: B u C K-finite, B, C complemented in B u C  =>  B, C K-finite
//   sum, prod:  B, C K-finite  =>  B + C, B x C K-finite
//   compl:      S complemented in K-finite X  =>  S K-finite
// plus soft checks reporting counterexamples to the unrestricted converse
// and non-complemented subobjects that are not K-finite.
KPropertiesReport k_properties_suite(const std::vector<PresheafRef>& sample);

struct KWitness {
  PresheafRef w;
  Subfunctor v;
};

// First (W, V <= W) in enumeration order with W K-finite and V not.
std::optional<KWitness> find_k_witness(const CategoryRef& base, std::size_t max_stage_size);

}  // namespace toposbench::finiteness
