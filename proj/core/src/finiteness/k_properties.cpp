#include "toposbench/finiteness/k_properties.hpp"

#include "toposbench/enumerate.hpp"
#include "toposbench/finiteness/notions.hpp"
#include "toposbench/limits.hpp"
#include "toposbench/omega.hpp"

namespace toposbench::finiteness {

bool KPropertiesReport::passed() const { return first_failure() == nullptr; }

const PropertyCheck* KPropertiesReport::first_failure() const {
  for (const auto& check : checks) {
    if (check.hard && !check.passed) return &check;
  }
  return nullptr;
}

namespace {

bool k_finite(const PresheafRef& a) { return kuratowski(a).verdict; }

std::string label(std::size_t i) { return "sample[" + std::to_string(i) + "]"; }

std::string sub_label(std::size_t i, std::size_t j) {
  return label(i) + ".sub[" + std::to_string(j) + "]";
}

// s is complemented inside u (s <= u).
bool complemented_in(const Subfunctor& s, const Subfunctor& u) {
  return join(s, meet(u, negate(s))) == u;
}

}  // namespace

KPropertiesReport k_properties_suite(const std::vector<PresheafRef>& sample) {
  KPropertiesReport report;
  std::vector<bool> finite;
  for (const auto& a : sample) finite.push_back(k_finite(a));

  auto record = [&](std::string property, std::string instance, bool hard, bool passed,
                    std::string detail = {}) {
    report.checks.push_back({std::move(property), std::move(instance), hard, passed, std::move(detail)});
  };

  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = 0; j < sample.size(); ++j) {
      if (!same_base(sample[i]->base(), sample[j]->base())) continue;
      const std::string pair = label(i) + ", " + label(j);
      if (finite[i]) {
        bool has_epi = false;
        for_each_nat_trans(*sample[i], *sample[j], NatFilter::Epi, [&](std::span<const Elem>) {
          has_epi = true;
          return false;
        });
        if (has_epi) record("epi", pair, true, finite[j], "epi image is not K-finite");
      }
      if (i <= j && finite[i] && finite[j]) {
        record("sum", pair, true, k_finite(coproduct(sample[i], sample[j]).object),
               "coproduct is not K-finite");
        record("prod", pair, true, k_finite(product(sample[i], sample[j]).object),
               "product is not K-finite");
      }
    }
  }

  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto subs = enumerate_subfunctors(sample[i]);
    std::vector<bool> sub_finite;
    for (const auto& s : subs) sub_finite.push_back(k_finite(s.as_presheaf()));
    for (std::size_t b = 0; b < subs.size(); ++b) {
      for (std::size_t c = b; c < subs.size(); ++c) {
        const Subfunctor u = join(subs[b], subs[c]);
        const bool u_finite = k_finite(u.as_presheaf());
        const std::string pair = sub_label(i, b) + ", " + sub_label(i, c);
        if (sub_finite[b] && sub_finite[c]) {
          record("union", pair, true, u_finite, "union of K-finite subobjects is not K-finite");
        }
        if (u_finite) {
          const bool both = sub_finite[b] && sub_finite[c];
          if (complemented_in(subs[b], u) && complemented_in(subs[c], u)) {
            record("union-conv", pair, true, both, "complemented part of a K-finite union");
          } else if (!both) {
            record("union-conv-unrestricted", pair, false, false,
                   "K-finite union with a part that is not K-finite");
          }
        }
      }
      if (finite[i]) {
        if (is_complemented(subs[b])) {
          record("compl", sub_label(i, b), true, sub_finite[b],
                 "complemented subobject is not K-finite");
        } else if (!sub_finite[b]) {
          record("compl-exempt", sub_label(i, b), false, false,
                 "non-complemented subobject is not K-finite");
        }
      }
    }
  }
  return report;
}

std::optional<KWitness> find_k_witness(const CategoryRef& base, std::size_t max_stage_size) {
  for (const auto& w : enumerate_presheaves(base, max_stage_size)) {
    if (!k_finite(w)) continue;
    for (const auto& v : enumerate_subfunctors(w)) {
      if (!k_finite(v.as_presheaf())) return KWitness{w, v};
    }
  }
  return std::nullopt;
}

}  // namespace toposbench::finiteness
