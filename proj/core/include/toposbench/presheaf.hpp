#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toposbench/category.hpp"

namespace toposbench {

using Elem = std::uint32_t;
using ElementNamer = std::function<std::string(ObjectId, Elem)>;

// A functor base → FinSet given stage-wise. action[f][x] is F(f)(x).
class Presheaf {
 public:
  Presheaf(CategoryRef base, std::vector<std::vector<std::string>> carriers,
           std::vector<std::vector<Elem>> action);
  Presheaf(CategoryRef base, std::vector<std::size_t> sizes,
           std::vector<std::vector<Elem>> action, ElementNamer namer);

  const CategoryRef& base() const { return base_; }
  std::size_t size(ObjectId c) const { return sizes_[c]; }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  std::size_t total_size() const;
  Elem act(ArrowId f, Elem x) const { return action_[f][x]; }
  const std::vector<Elem>& action(ArrowId f) const { return action_[f]; }

  std::string element_name(ObjectId c, Elem x) const;
  std::optional<Elem> find_element(ObjectId c, const std::string& name) const;
  bool has_explicit_names() const { return !names_.empty(); }

  // Same base, carrier sizes and actions; names are ignored.
  bool same_structure(const Presheaf& other) const;

 private:
  void validate() const;

  CategoryRef base_;
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<Elem>> action_;
  std::vector<std::vector<std::string>> names_;
  ElementNamer namer_;
};

using PresheafRef = std::shared_ptr<const Presheaf>;

template <typename... Args>
PresheafRef make_presheaf(Args&&... args) {
  return std::make_shared<const Presheaf>(std::forward<Args>(args)...);
}

// Hom(c, −): stage e holds the arrows c → e in declaration order.
PresheafRef representable(const CategoryRef& base, ObjectId c);

class NatTrans {
 public:
  NatTrans(PresheafRef source, PresheafRef target,
           std::vector<std::vector<Elem>> components);

  const PresheafRef& source() const { return source_; }
  const PresheafRef& target() const { return target_; }
  const std::vector<Elem>& component(ObjectId c) const { return components_[c]; }
  const std::vector<std::vector<Elem>>& components() const { return components_; }
  Elem operator()(ObjectId c, Elem x) const { return components_[c][x]; }

  bool is_mono() const;
  bool is_epi() const;
  bool is_iso() const;

  // Equal components between structurally equal endpoints.
  bool operator==(const NatTrans& other) const;

 private:
  PresheafRef source_;
  PresheafRef target_;
  std::vector<std::vector<Elem>> components_;
};

// g∘f
NatTrans compose(const NatTrans& g, const NatTrans& f);
NatTrans identity(const PresheafRef& f);

// An action-closed family of subsets of the host's carriers.
class Subfunctor {
 public:
  Subfunctor(PresheafRef host, std::vector<std::vector<bool>> part);

  static Subfunctor empty(const PresheafRef& host);
  static Subfunctor full(const PresheafRef& host);

  const PresheafRef& host() const { return host_; }
  bool contains(ObjectId c, Elem x) const { return part_[c][x]; }
  const std::vector<std::vector<bool>>& part() const { return part_; }
  std::size_t size(ObjectId c) const;
  std::size_t total_size() const;
  std::vector<Elem> elements(ObjectId c) const;

  bool is_empty() const { return total_size() == 0; }
  bool is_full() const;

  // The subfunctor as a presheaf of its own, keeping element names.
  PresheafRef as_presheaf() const;
  // Inclusion from as_presheaf() into the host.
  NatTrans inclusion() const;

  bool operator==(const Subfunctor& other) const { return part_ == other.part_; }
  bool operator<=(const Subfunctor& other) const;

 private:
  PresheafRef host_;
  std::vector<std::vector<bool>> part_;
  mutable PresheafRef presheaf_;
};

// Least subfunctor containing the given elements.
Subfunctor generated_subfunctor(const PresheafRef& host,
                                const std::vector<std::vector<bool>>& seeds);
Subfunctor image(const NatTrans& f);

}  // namespace toposbench
