#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "toposbench/budget.hpp"
#include "toposbench/exponential.hpp"
#include "toposbench/limits.hpp"
#include "toposbench/logic/typecheck.hpp"
#include "toposbench/omega.hpp"

namespace toposbench::logic {

// A type interpreted as a presheaf. Objects, product cones and exponentials
// are built on first use, so a type can appear in a formula whose carrier is
// never enumerated.
class TypeObject {
 public:
  TypeObject(TypeRef type, PresheafRef object);
  TypeObject(TypeRef type, std::vector<const TypeObject*> factors, CategoryRef base);
  TypeObject(TypeRef type, const TypeObject* element, const TypeObject* codomain, Budget budget);

  const TypeRef& type() const { return type_; }
  const PresheafRef& object() const;
  const ProductCone& cone() const;               // Product
  const Exponential& exponential() const;        // Power (as Omega^A) and Exp
  const TypeObject* element() const { return element_; }    // Power, Exp: A
  const TypeObject* codomain() const { return codomain_; }  // Exp: B; Power: Omega
  const std::vector<const TypeObject*>& factors() const { return factors_; }

 private:
  TypeRef type_;
  CategoryRef base_;
  Budget budget_;
  const TypeObject* element_ = nullptr;
  const TypeObject* codomain_ = nullptr;
  std::vector<const TypeObject*> factors_;
  mutable PresheafRef object_;
  mutable std::optional<ProductCone> cone_;
  mutable ExponentialRef exponential_;
};

struct EvalOptions {
  // When false, derived connectives are forced directly (Kripke-Joyal)
  // instead of through their abbreviations.
  bool expand_derived = true;
  std::size_t memo_limit = std::size_t{1} << 22;
  Budget budget = Budget::from_environment();
};

struct EvalStats {
  std::uint64_t forced_calls = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t memo_resets = 0;
};

struct Truth {
  bool holds;
  NatTrans value;  // 1 → Omega
};

class Evaluator {
 public:
  explicit Evaluator(Signature sig, EvalOptions options = {});
  ~Evaluator();
  Evaluator(const Evaluator&) = delete;
  Evaluator& operator=(const Evaluator&) = delete;

  const Signature& signature() const;
  const OmegaRef& omega() const;
  const TypeObject& materialize(const TypeRef& type);

  // [[term]] : [[context]] → [[type]], the context read as an n-ary product.
  NatTrans denote(const TermRef& term, const Context& context = {});
  NatTrans denote(std::string_view term, const Context& context = {});
  // Product of the context types; the domain of denote.
  const ProductCone& context_object(const Context& context);

  Truth holds(const TermRef& formula);
  Truth holds(std::string_view formula);

  // Whether the formula is forced at `stage` by the given context values.
  bool forced(const TermRef& formula, ObjectId stage, const Context& context,
              std::span<const Elem> values);

  // A formula prepared once for repeated forcing queries.
  using Handle = std::size_t;
  Handle prepare(const TermRef& formula, const Context& context);
  bool forced(Handle formula, ObjectId stage, std::span<const Elem> values);

  const EvalStats& stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// The global element of Omega^X naming a subobject of X.
NatTrans subobject_name(const Subfunctor& s, const Exponential& power, const OmegaStructure& omega);

}  // namespace toposbench::logic
