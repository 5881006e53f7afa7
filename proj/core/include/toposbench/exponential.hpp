#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "toposbench/budget.hpp"
#include "toposbench/limits.hpp"
#include "toposbench/table_index.hpp"

namespace toposbench {

// B^A. Stage c carries the natural families Hom(c,−) × A ⇒ B, each stored as
// its flattened table over positions (e, l: c → e, x ∈ A(e)) in canonical
// order: e by object, l by declaration, x by carrier order.
class Exponential {
 public:
  static std::shared_ptr<const Exponential> build(const PresheafRef& a, const PresheafRef& b,
                                                  const Budget& budget = Budget::from_environment());

  const PresheafRef& object() const { return object_; }
  const PresheafRef& exponent() const { return a_; }
  const PresheafRef& codomain() const { return b_; }

  // ev : B^A × A → B
  const ProductCone& evaluation_domain() const { return ev_domain_; }
  const NatTrans& evaluation() const { return *evaluation_; }

  // phi : X × A → B, where domain = product(X, A); returns X → B^A.
  NatTrans transpose(const NatTrans& phi, const ProductCone& domain) const;
  // psi : X → B^A; returns X × A → B over domain = product(X, A).
  NatTrans untranspose(const NatTrans& psi, const ProductCone& domain) const;

  std::size_t table_width(ObjectId c) const { return tables_[c].width(); }
  std::span<const Elem> table(ObjectId c, Elem family) const { return tables_[c].row(family); }
  std::size_t position(ObjectId c, ArrowId l, Elem x) const {
    const FinCategory& cat = *a_->base();
    const ObjectId e = cat.cod(l);
    return offsets_[c][e] + cat.hom_rank(l) * a_->size(e) + x;
  }
  Elem entry(ObjectId c, Elem family, ArrowId l, Elem x) const {
    return tables_[c].row(family)[position(c, l, x)];
  }
  std::optional<Elem> find(ObjectId c, std::span<const Elem> table) const {
    return tables_[c].find(table);
  }
  // Source positions for restriction along f: c → c′, indexed by positions of c′.
  const std::vector<std::size_t>& gather(ArrowId f) const { return gather_[f]; }

 private:
  Exponential() = default;

  PresheafRef a_;
  PresheafRef b_;
  PresheafRef object_;
  std::vector<std::vector<std::size_t>> offsets_;
  std::vector<TableIndex> tables_;
  std::vector<std::vector<std::size_t>> gather_;
  ProductCone ev_domain_;
  std::unique_ptr<NatTrans> evaluation_;
};

using ExponentialRef = std::shared_ptr<const Exponential>;

}  // namespace toposbench
