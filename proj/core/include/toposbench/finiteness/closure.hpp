#pragma once

#include <functional>
#include <string>
#include <vector>

#include "toposbench/certify.hpp"
#include "toposbench/exponential.hpp"
#include "toposbench/omega.hpp"

namespace toposbench::finiteness {

// A natural map host × host → host given stage-wise.
struct BinaryOperation {
  std::string name;
  std::function<Elem(ObjectId, Elem, Elem)> apply;
};

struct ClosureSpec {
  PresheafRef host;
  Subfunctor generators;
  std::vector<BinaryOperation> operations;
};

// Least subfunctor of the host containing the generators and closed under
// every operation at every stage.
Subfunctor closure_subobject(const ClosureSpec& spec);

// Naturality of op on every pair of elements of every stage.
Certification certify_operation(const PresheafRef& host, const BinaryOperation& op);

// Pointwise join of families in Omega^A.
BinaryOperation internal_union(const ExponentialRef& power, const OmegaRef& omega);

// The global element of Omega^A naming s, via its classifying map.
NatTrans name_of(const Subfunctor& s, const Exponential& power, const OmegaStructure& omega);

// {.} : A → Omega^A, the transpose of the equality predicate on A.
NatTrans singleton_map(const Exponential& power, const OmegaStructure& omega);

// Stage of the arrow behind each table position of Omega^A at stage c.
std::vector<ObjectId> position_stages(const Exponential& power, ObjectId c);

}  // namespace toposbench::finiteness
