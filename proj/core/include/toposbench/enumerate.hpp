#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "toposbench/presheaf.hpp"

namespace toposbench {

enum class NatFilter { All, Mono, Epi, Iso };

// Visits every natural transformation F ⇒ G passing the filter, in canonical
// (lexicographic) order of the flattened components: stage by stage in object
// order, elements in carrier order. Returning false from visit stops the walk.
void for_each_nat_trans(const Presheaf& f, const Presheaf& g, NatFilter filter,
                        const std::function<bool(std::span<const Elem>)>& visit);

std::vector<NatTrans> enumerate_nat_trans(const PresheafRef& f, const PresheafRef& g,
                                          NatFilter filter = NatFilter::All);
std::size_t count_nat_trans(const PresheafRef& f, const PresheafRef& g,
                            NatFilter filter = NatFilter::All);

// Unflattens a component vector produced by for_each_nat_trans.
std::vector<std::vector<Elem>> unflatten(const Presheaf& source, std::span<const Elem> flat);

// Natural transformations from the terminal presheaf.
std::vector<NatTrans> global_elements(const PresheafRef& f);

// Every presheaf on base whose stages have at most max_stage_size elements,
// ordered by stage sizes and then lexicographically by action tables.
std::vector<PresheafRef> enumerate_presheaves(const CategoryRef& base,
                                              std::size_t max_stage_size);

}  // namespace toposbench
