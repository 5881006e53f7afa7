#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toposbench/budget.hpp"
#include "toposbench/limits.hpp"

namespace toposbench {

// A cosieve on c as a bit set over arrow ids (bit f set iff f ∈ S).
using Cosieve = std::uint64_t;

// Visits every subfunctor of f as a stage-wise characteristic vector, in
// lexicographic order (excluded before included). Return false to stop.
void for_each_subfunctor(const Presheaf& f,
                         const std::function<bool(const std::vector<std::vector<bool>>&)>& visit);

std::vector<Subfunctor> enumerate_subfunctors(const PresheafRef& f);

// Heyting operations on the subfunctors of a common host.
Subfunctor meet(const Subfunctor& a, const Subfunctor& b);
Subfunctor join(const Subfunctor& a, const Subfunctor& b);
Subfunctor implies(const Subfunctor& a, const Subfunctor& b);
Subfunctor negate(const Subfunctor& a);
bool is_complemented(const Subfunctor& a);

class SubobjectLattice {
 public:
  explicit SubobjectLattice(PresheafRef host);

  const PresheafRef& host() const { return host_; }
  const std::vector<Subfunctor>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t index_of(const Subfunctor& s) const;

  const Subfunctor& bottom() const { return elements_.front(); }
  const Subfunctor& top() const { return elements_.back(); }

 private:
  PresheafRef host_;
  std::vector<Subfunctor> elements_;
};

SubobjectLattice subobject_lattice(const PresheafRef& f);

class OmegaStructure {
 public:
  static std::shared_ptr<const OmegaStructure> build(const CategoryRef& base,
                                                     const Budget& budget = Budget::from_environment());

  const CategoryRef& base() const { return base_; }
  const PresheafRef& object() const { return omega_; }
  const PresheafRef& terminal_object() const { return terminal_; }
  const NatTrans& top() const { return *top_; }

  Cosieve cosieve(ObjectId c, Elem w) const { return cosieves_[c][w]; }
  Elem find(ObjectId c, Cosieve s) const;
  Elem top_at(ObjectId c) const { return static_cast<Elem>(cosieves_[c].size() - 1); }
  Elem bottom_at(ObjectId) const { return 0; }
  bool is_top(ObjectId c, Elem w) const { return w == top_at(c); }
  Cosieve maximal(ObjectId c) const { return maximal_[c]; }

  Elem meet(ObjectId c, Elem a, Elem b) const;
  Elem join(ObjectId c, Elem a, Elem b) const;
  Elem implies(ObjectId c, Elem a, Elem b) const;
  Elem negate(ObjectId c, Elem a) const;

  // χ_S : host → Ω
  NatTrans classify(const Subfunctor& s) const;
  // {x | χ(x) = ⊤}
  Subfunctor pullback_of_top(const NatTrans& chi) const;
  // Global element of Ω from one element per stage.
  NatTrans truth_value(std::vector<Elem> stages) const;

  std::string cosieve_name(ObjectId c, Cosieve s) const;

 private:
  OmegaStructure() = default;

  CategoryRef base_;
  PresheafRef omega_;
  PresheafRef terminal_;
  std::unique_ptr<NatTrans> top_;
  std::vector<std::vector<Cosieve>> cosieves_;
  std::vector<Cosieve> maximal_;
};

using OmegaRef = std::shared_ptr<const OmegaStructure>;

}  // namespace toposbench
