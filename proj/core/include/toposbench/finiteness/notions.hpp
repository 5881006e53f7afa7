#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toposbench/finiteness/closure.hpp"
#include "toposbench/logic/eval.hpp"

namespace toposbench::finiteness {

enum class Mode { Internal, External };

struct FinitenessNotion {
  enum class Tag { Dedekind, Kuratowski, Lp };
  Tag tag = Tag::Kuratowski;
  std::size_t p = 0;  // Lp only, at least 1
  Mode mode = Mode::Internal;

  // "dedekind", "kuratowski", "lp:<p>"
  static FinitenessNotion parse(std::string_view notion, Mode mode = Mode::Internal);
  std::string name() const;
};

std::string_view mode_name(Mode mode);

// forall f in A^A (Mono(f) => Iso(f)), over the ground type A.
extern const char* const kDedekindSentence;
// forall z in Omega^(Omega^A) (closure conditions => A in z), over A.
extern const char* const kKuratowskiSentence;

struct DedekindResult {
  bool verdict = false;
  std::optional<logic::Truth> truth;   // internal mode
  std::size_t monos = 0;               // external mode
  std::optional<NatTrans> witness;     // external: a mono that is not iso
};

DedekindResult dedekind(const PresheafRef& a, Mode mode,
                        const logic::EvalOptions& options = {});

struct KuratowskiResult {
  bool verdict = false;
  ExponentialRef power;  // Omega^A
  Subfunctor closure;    // K(A)
  NatTrans top_name;     // the name of A itself
  std::vector<ObjectId> failing_stages;
};

// K(A): closure of the empty name and the singletons under internal union.
KuratowskiResult kuratowski(const PresheafRef& a, const Budget& budget = Budget::from_environment());

// Direct evaluation of the sentence over Omega^(Omega^A); tiny carriers only.
logic::Truth kuratowski_direct(const PresheafRef& a, const logic::EvalOptions& options = {});

enum class SquireScope {
  Global,     // generators are names of global subobjects
  StageWise,  // generators are generalized elements of Omega^A at every stage
};

enum class SquireSatisfaction {
  Classical,  // per-stage counting of fibres
  Forcing,    // phi_p forced in the internal logic
};

struct SquireOptions {
  SquireScope scope = SquireScope::StageWise;
  SquireSatisfaction satisfaction = SquireSatisfaction::Classical;
  bool witnesses_in_subset = false;  // require each x_i in S
  Budget budget = Budget::from_environment();
};

struct SquireResult {
  bool verdict = false;
  ExponentialRef power;
  Subfunctor generators;
  Subfunctor lattice;  // L_p(A)
};

SquireResult squire_lp(const PresheafRef& a, std::size_t p, const SquireOptions& options = {});

// exists x1:A ... exists xp:A. forall y:A. (y in S => (y = x1 \/ ... \/ y = xp)),
// optionally also requiring each xi in S.
std::string phi_p_formula(std::size_t p, bool witnesses_in_subset);

struct SquireVariant {
  SquireScope scope;
  SquireSatisfaction satisfaction;
  bool verdict;
};

// All scope/satisfaction combinations, in declaration order.
std::vector<SquireVariant> squire_variants(const PresheafRef& a, std::size_t p,
                                           bool witnesses_in_subset = false);

std::string_view scope_name(SquireScope scope);
std::string_view satisfaction_name(SquireSatisfaction satisfaction);

}  // namespace toposbench::finiteness
