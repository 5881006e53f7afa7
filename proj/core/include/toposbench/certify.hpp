#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toposbench/exponential.hpp"
#include "toposbench/limits.hpp"
#include "toposbench/omega.hpp"

namespace toposbench {

struct CertificationFailure {
  std::string property;
  std::string detail;
};

// nullopt means the property held on every test object.
using Certification = std::optional<CertificationFailure>;

Certification certify_terminal(const CategoryRef& base, const std::vector<PresheafRef>& tests);
Certification certify_initial(const CategoryRef& base, const std::vector<PresheafRef>& tests);
Certification certify_product(const ProductCone& cone, const std::vector<PresheafRef>& tests);
Certification certify_coproduct(const CoproductCocone& cocone,
                                const std::vector<PresheafRef>& tests);
Certification certify_equalizer(const NatTrans& f, const NatTrans& g, const EqualizerCone& cone,
                                const std::vector<PresheafRef>& tests);
Certification certify_pullback(const NatTrans& f, const NatTrans& g, const PullbackCone& cone,
                               const std::vector<PresheafRef>& tests);
// Currying bijection Hom(X × A, B) ≅ Hom(X, B^A) on every test object X.
Certification certify_exponential(const Exponential& exp, const std::vector<PresheafRef>& tests);
// classify is a bijection Sub(F) ≅ Hom(F, Ω) inverse to pulling back ⊤.
Certification certify_omega(const OmegaStructure& omega, const PresheafRef& host);

// Operation tables of a finite lattice, indexed by SubobjectLattice order.
struct HeytingTables {
  std::size_t size = 0;
  std::size_t bottom = 0;
  std::size_t top = 0;
  std::vector<std::size_t> meet;
  std::vector<std::size_t> join;
  std::vector<std::size_t> implies;
  std::vector<std::size_t> negate;
  std::vector<bool> leq;

  std::size_t at(const std::vector<std::size_t>& table, std::size_t a, std::size_t b) const {
    return table[a * size + b];
  }
};

HeytingTables heyting_tables(const SubobjectLattice& lattice);

// Checks distributivity, the adjunction a∧b ≤ c ⇔ a ≤ (b⇒c) and ¬a = a⇒⊥;
// the failure names the offending triple.
Certification certify_heyting(const HeytingTables& tables);

}  // namespace toposbench
