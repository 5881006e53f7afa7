#include "suite.hpp"

#include <algorithm>
#include <random>

#include "toposbench/certify.hpp"
#include "toposbench/enumerate.hpp"
#include "toposbench/error.hpp"
#include "toposbench/exponential.hpp"
#include "toposbench/finiteness/closure.hpp"
#include "toposbench/finiteness/k_properties.hpp"
#include "toposbench/finiteness/notions.hpp"
#include "toposbench/io/model.hpp"
#include "toposbench/limits.hpp"
#include "toposbench/omega.hpp"

namespace toposbench::cli {

namespace {

struct BaseEntry {
  std::string name;
  CategoryRef base;
  std::vector<PresheafRef> objects;  // filled on first draw
  std::size_t max_stage = 0;
};

std::vector<BaseEntry> base_entries() {
  std::vector<BaseEntry> out;
  out.push_back({"trivial", trivial_category(), {}, 0});
  out.push_back({"arrow", arrow_category(), {}, 0});
  for (std::size_t order : {2, 3}) {
    const auto monoids = enumerate_monoids(order);
    for (std::size_t k = 0; k < monoids.size(); ++k) {
      out.push_back({"monoid" + std::to_string(order) + "." + std::to_string(k),
                     monoid_to_category(monoids[k]), {}, 0});
    }
  }
  return out;
}

std::string sizes_text(const Presheaf& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.sizes().size(); ++i) {
    out += (i ? "," : "") + std::to_string(p.sizes()[i]);
  }
  return out + ")";
}

const PresheafRef& draw(BaseEntry& entry, std::size_t max_stage, std::mt19937_64& rng) {
  if (entry.objects.empty() || entry.max_stage != max_stage) {
    entry.objects = enumerate_presheaves(entry.base, max_stage);
    entry.max_stage = max_stage;
  }
  return entry.objects[rng() % entry.objects.size()];
}

std::vector<NamedObject> draw_sample(std::vector<BaseEntry>& entries, std::size_t first,
                                     std::size_t last, std::uint64_t seed, std::size_t count,
                                     std::size_t max_stage, const std::string& prefix) {
  std::mt19937_64 rng(seed);
  std::vector<NamedObject> out;
  for (std::size_t i = 0; i < count; ++i) {
    BaseEntry& entry = entries[first + rng() % (last - first)];
    PresheafRef object = draw(entry, max_stage, rng);
    PresheafRef partner = draw(entry, max_stage, rng);
    out.push_back({prefix + "[" + std::to_string(i) + "] over " + entry.name + " sizes " +
                       sizes_text(*object) + " partner " + sizes_text(*partner),
                   std::move(object), std::move(partner)});
  }
  return out;
}

std::vector<PresheafRef> test_objects(const CategoryRef& base) {
  std::vector<PresheafRef> out{terminal(base), initial(base)};
  for (ObjectId c = 0; c < base->object_count(); ++c) out.push_back(representable(base, c));
  return out;
}

std::optional<SuiteFailure> fail(const Certification& c, const std::string& instance) {
  if (!c) return std::nullopt;
  return SuiteFailure{c->property, instance, c->detail};
}

}  // namespace

std::vector<CategoryRef> suite_bases() {
  std::vector<CategoryRef> out;
  for (const auto& e : base_entries()) out.push_back(e.base);
  return out;
}

std::vector<NamedObject> random_presheaves(std::uint64_t seed, std::size_t count,
                                           std::size_t max_stage) {
  auto entries = base_entries();
  return draw_sample(entries, 0, entries.size(), seed, count, max_stage, "random");
}

std::optional<SuiteFailure> certify_structure(const NamedObject& p,
                                              std::map<std::string, std::size_t>& counts,
                                              const std::string& inject) {
  const PresheafRef& a = p.object;
  const PresheafRef& b = p.partner ? p.partner : p.object;
  const CategoryRef& base = a->base();
  const auto tests = test_objects(base);
  const std::string& at = p.name;

  ++counts["product"];
  if (auto f = fail(certify_product(product(a, b), tests), at)) return f;
  ++counts["coproduct"];
  if (auto f = fail(certify_coproduct(coproduct(a, b), tests), at)) return f;

  std::vector<NatTrans> maps;
  std::size_t seen = 0;
  for_each_nat_trans(*a, *b, NatFilter::All, [&](std::span<const Elem> flat) {
    if (maps.size() < 2 || seen < 64) {
      NatTrans m(a, b, unflatten(*a, flat));
      if (maps.size() < 2) {
        maps.push_back(std::move(m));
      } else {
        maps[1] = std::move(m);
      }
    }
    return ++seen < 64;
  });
  if (!maps.empty()) {
    const NatTrans& f = maps.front();
    const NatTrans& g = maps.back();
    ++counts["equalizer"];
    if (auto e = fail(certify_equalizer(f, g, equalizer(f, g), tests), at)) return e;
    ++counts["pullback"];
    if (auto e = fail(certify_pullback(f, g, pullback(f, g), tests), at)) return e;
  }

  ++counts["exponential"];
  if (auto f = fail(certify_exponential(*Exponential::build(a, b), tests), at)) return f;

  const auto omega = OmegaStructure::build(base);
  ++counts["omega"];
  if (auto f = fail(certify_omega(*omega, a), at)) return f;

  HeytingTables tables = heyting_tables(subobject_lattice(a));
  if (inject == "heyting" && tables.size >= 2) {
    tables.implies[tables.top * tables.size + tables.bottom] = tables.top;
    tables.negate[tables.top] = tables.top;
  }
  ++counts["heyting"];
  return fail(certify_heyting(tables), at);
}

std::vector<NamedObject> fixture_presheaves(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (entry.path().extension() == ".json" && name.rfind("tm_", 0) != 0) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<NamedObject> out;
  for (const auto& file : files) {
    const io::Model model = io::load_model(file);
    for (const auto& [name, p] : model.presheaves) {
      out.push_back({file.filename().string() + ":" + name, p, nullptr});
    }
  }
  return out;
}

SuiteReport run_suite(const SuiteOptions& options) {
  SuiteReport report;
  auto& counts = report.checks;
  auto record = [&](std::optional<SuiteFailure> f) {
    if (f && !report.failure) report.failure = std::move(f);
    return !report.failure;
  };

  try {
    if (!options.fixtures.empty()) {
      for (const auto& p : fixture_presheaves(options.fixtures)) {
        if (!record(certify_structure(p, counts, options.inject))) return report;
      }
    }
    for (const auto& p : random_presheaves(options.seed, options.random_objects, options.max_stage)) {
      if (!record(certify_structure(p, counts, options.inject))) return report;
    }

    // Every notion agrees with plain finiteness over the trivial base.
    const CategoryRef sets = trivial_category();
    for (std::size_t n = 0; n <= 3; ++n) {
      std::vector<Elem> id(n);
      for (Elem x = 0; x < n; ++x) id[x] = x;
      const PresheafRef a = make_presheaf(sets, std::vector<std::size_t>{n},
                                          std::vector<std::vector<Elem>>{id},
                                          [](ObjectId, Elem x) { return "e" + std::to_string(x); });
      const std::string at = "set of size " + std::to_string(n);
      std::vector<std::pair<std::string, bool>> verdicts{
          {"dedekind internal", finiteness::dedekind(a, finiteness::Mode::Internal).verdict},
          {"dedekind external", finiteness::dedekind(a, finiteness::Mode::External).verdict},
          {"kuratowski", finiteness::kuratowski(a).verdict}};
      for (std::size_t p = 1; p <= 3; ++p) {
        verdicts.emplace_back("lp:" + std::to_string(p), finiteness::squire_lp(a, p).verdict);
      }
      for (const auto& [notion, verdict] : verdicts) {
        ++counts["tarski"];
        if (!verdict && !record(SuiteFailure{"tarski", at, notion + " is false"})) return report;
      }
    }

    auto entries = base_entries();
    auto sample = draw_sample(entries, 0, 2, options.seed + 1, 12, 2, "sample");

    std::vector<PresheafRef> objects;
    for (const auto& s : sample) objects.push_back(s.object);
    const auto k = finiteness::k_properties_suite(objects);
    for (const auto& check : k.checks) {
      if (!check.hard) {
        if (!check.passed) report.notes.push_back(check.property + " at " + check.instance + ": " + check.detail);
        continue;
      }
      ++counts["k_properties"];
      if (!check.passed && !record(SuiteFailure{"k_properties:" + check.property, check.instance,
                                                check.detail})) {
        return report;
      }
    }

    std::mt19937_64 rng(options.seed + 2);
    for (const auto& s : sample) {
      const PresheafRef& a = s.object;
      const auto omega = OmegaStructure::build(a->base());
      const auto power = Exponential::build(a, omega->object());
      const PresheafRef& host = power->object();
      std::vector<std::vector<bool>> small(host->sizes().size()), large(host->sizes().size());
      for (ObjectId c = 0; c < small.size(); ++c) {
        for (Elem x = 0; x < host->size(c); ++x) {
          const auto roll = rng() % 8;
          large[c].push_back(roll < 2);
          small[c].push_back(roll < 1);
        }
      }
      const std::vector<finiteness::BinaryOperation> ops{finiteness::internal_union(power, omega)};
      const Subfunctor g1 = generated_subfunctor(host, small);
      const Subfunctor g2 = generated_subfunctor(host, large);
      const Subfunctor c1 = finiteness::closure_subobject({host, g1, ops});
      const Subfunctor c2 = finiteness::closure_subobject({host, g2, ops});
      ++counts["closure_laws"];
      if (!(g1 <= c1)) {
        record(SuiteFailure{"closure_laws", s.name, "not extensive"});
        return report;
      }
      if (!(c1 <= c2)) {
        record(SuiteFailure{"closure_laws", s.name, "not monotone"});
        return report;
      }
      if (!(finiteness::closure_subobject({host, c1, ops}) == c1)) {
        record(SuiteFailure{"closure_laws", s.name, "not idempotent"});
        return report;
      }

      bool previous = false;
      for (std::size_t p = 1; p <= 3; ++p) {
        const bool lp = finiteness::squire_lp(a, p).verdict;
        ++counts["squire_monotone"];
        if (previous && !lp) {
          record(SuiteFailure{"squire_monotone", s.name,
                              "L_" + std::to_string(p - 1) + " holds but L_" + std::to_string(p) + " fails"});
          return report;
        }
        previous = lp;
      }

      const bool k_closure = finiteness::kuratowski(a).verdict;
      if (a->total_size() <= 2) {
        ++counts["kuratowski_cross_check"];
        if (finiteness::kuratowski_direct(a).holds != k_closure) {
          record(SuiteFailure{"kuratowski_cross_check", s.name, "closure and direct sentence disagree"});
          return report;
        }
      }
      if (finiteness::squire_lp(a, 1).verdict != k_closure) {
        report.notes.push_back("L_1 and Kuratowski differ at " + s.name);
      }
    }
  } catch (const Error& e) {
    record(SuiteFailure{std::string(error_code_name(e.code())), "suite", e.what()});
  }
  return report;
}

}  // namespace toposbench::cli
