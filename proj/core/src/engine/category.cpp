#include "toposbench/category.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "toposbench/error.hpp"

namespace toposbench {

namespace {

std::string composite_name(const std::string& g, const std::string& f) {
  return g + "." + f;
}

}  // namespace

void FinCategory::index() {
  const std::size_t n = objects_.size();
  out_.assign(n, {});
  hom_.assign(n * n, {});
  hom_rank_.assign(arrows_.size(), 0);
  for (ArrowId f = 0; f < arrows_.size(); ++f) {
    out_[arrows_[f].dom].push_back(f);
    auto& hom = hom_[arrows_[f].dom * n + arrows_[f].cod];
    hom_rank_[f] = hom.size();
    hom.push_back(f);
  }
}

std::optional<ObjectId> FinCategory::find_object(const std::string& name) const {
  for (ObjectId c = 0; c < objects_.size(); ++c) {
    if (objects_[c] == name) return c;
  }
  return std::nullopt;
}

std::optional<ArrowId> FinCategory::find_arrow(const std::string& name) const {
  for (ArrowId f = 0; f < arrows_.size(); ++f) {
    if (arrows_[f].name == name) return f;
  }
  return std::nullopt;
}

RawCategory FinCategory::to_raw() const {
  RawCategory raw;
  raw.objects = objects_;
  for (const auto& a : arrows_) {
    raw.arrows.push_back({a.name, objects_[a.dom], objects_[a.cod]});
  }
  for (ObjectId c = 0; c < objects_.size(); ++c) {
    raw.identities[objects_[c]] = arrows_[identities_[c]].name;
  }
  for (ArrowId g = 0; g < arrows_.size(); ++g) {
    for (ArrowId f = 0; f < arrows_.size(); ++f) {
      const ArrowId h = compose(g, f);
      if (h != kNoArrow) {
        raw.compose[{arrows_[g].name, arrows_[f].name}] = arrows_[h].name;
      }
    }
  }
  return raw;
}

bool FinCategory::operator==(const FinCategory& other) const {
  if (objects_ != other.objects_ || identities_ != other.identities_ ||
      table_ != other.table_ || arrows_.size() != other.arrows_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name != other.arrows_[i].name ||
        arrows_[i].dom != other.arrows_[i].dom ||
        arrows_[i].cod != other.arrows_[i].cod) {
      return false;
    }
  }
  return true;
}

FinCategory validate_category(const RawCategory& raw) {
  FinCategory cat;
  cat.objects_ = raw.objects;
  std::set<std::string> seen;
  for (const auto& name : raw.objects) {
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::MalformedInput, "duplicate object '" + name + "'");
    }
  }
  if (raw.objects.empty()) {
    throw Error(ErrorCode::MalformedInput, "category has no objects");
  }
  seen.clear();
  for (const auto& spec : raw.arrows) {
    if (!seen.insert(spec.name).second) {
      throw Error(ErrorCode::MalformedInput, "duplicate arrow '" + spec.name + "'");
    }
    const auto dom = std::find(raw.objects.begin(), raw.objects.end(), spec.dom);
    const auto cod = std::find(raw.objects.begin(), raw.objects.end(), spec.cod);
    if (dom == raw.objects.end() || cod == raw.objects.end()) {
      throw Error(ErrorCode::MalformedInput,
                  "arrow '" + spec.name + "' references an undeclared object");
    }
    cat.arrows_.push_back({spec.name,
                           static_cast<ObjectId>(dom - raw.objects.begin()),
                           static_cast<ObjectId>(cod - raw.objects.begin())});
  }
  const std::size_t n = cat.arrows_.size();
  cat.table_.assign(n * n, kNoArrow);

  for (const auto& [pair, result] : raw.compose) {
    const auto g = cat.find_arrow(pair.first);
    const auto f = cat.find_arrow(pair.second);
    const auto h = cat.find_arrow(result);
    if (!g || !f || !h) {
      throw Error(ErrorCode::MalformedInput,
                  "composite '" + composite_name(pair.first, pair.second) +
                      "' references an undeclared arrow");
    }
    if (cat.arrows_[*g].dom != cat.arrows_[*f].cod) {
      throw Error(ErrorCode::MalformedInput,
                  "composite '" + composite_name(pair.first, pair.second) +
                      "' given for a non-composable pair");
    }
    if (cat.arrows_[*h].dom != cat.arrows_[*f].dom ||
        cat.arrows_[*h].cod != cat.arrows_[*g].cod) {
      throw Error(ErrorCode::MalformedInput,
                  "composite '" + composite_name(pair.first, pair.second) + "' = '" +
                      result + "' has the wrong domain or codomain");
    }
    cat.table_[*g * n + *f] = *h;
  }

  // Declared identities fill their own composites; the rest must be listed.
  cat.identities_.assign(raw.objects.size(), kNoArrow);
  for (const auto& [object, arrow] : raw.identities) {
    const auto c = cat.find_object(object);
    const auto e = cat.find_arrow(arrow);
    if (!c || !e) {
      throw Error(ErrorCode::MalformedInput,
                  "identity entry '" + object + "' references an undeclared name");
    }
    if (cat.arrows_[*e].dom != *c || cat.arrows_[*e].cod != *c) {
      throw Error(ErrorCode::IdentityViolation,
                  "identity '" + arrow + "' is not an endo-arrow of '" + object + "'");
    }
    cat.identities_[*c] = *e;
    for (ArrowId f = 0; f < n; ++f) {
      if (cat.arrows_[f].cod == *c && cat.table_[*e * n + f] == kNoArrow) {
        cat.table_[*e * n + f] = f;
      }
      if (cat.arrows_[f].dom == *c && cat.table_[f * n + *e] == kNoArrow) {
        cat.table_[f * n + *e] = f;
      }
    }
  }

  for (ArrowId g = 0; g < n; ++g) {
    for (ArrowId f = 0; f < n; ++f) {
      if (cat.arrows_[g].dom == cat.arrows_[f].cod && cat.table_[g * n + f] == kNoArrow) {
        throw Error(ErrorCode::MissingComposite,
                    "missing composite '" +
                        composite_name(cat.arrows_[g].name, cat.arrows_[f].name) + "'");
      }
    }
  }

  auto acts_as_identity = [&](ObjectId c, ArrowId e) {
    for (ArrowId f = 0; f < n; ++f) {
      if (cat.arrows_[f].cod == c && cat.table_[e * n + f] != f) return false;
      if (cat.arrows_[f].dom == c && cat.table_[f * n + e] != f) return false;
    }
    return true;
  };

  for (ObjectId c = 0; c < raw.objects.size(); ++c) {
    if (cat.identities_[c] != kNoArrow) {
      if (!acts_as_identity(c, cat.identities_[c])) {
        throw Error(ErrorCode::IdentityViolation,
                    "arrow '" + cat.arrows_[cat.identities_[c]].name +
                        "' violates the identity laws at '" + raw.objects[c] + "'");
      }
      continue;
    }
    for (ArrowId e = 0; e < n; ++e) {
      if (cat.arrows_[e].dom == c && cat.arrows_[e].cod == c && acts_as_identity(c, e)) {
        cat.identities_[c] = e;
        break;
      }
    }
    if (cat.identities_[c] == kNoArrow) {
      throw Error(ErrorCode::IdentityViolation,
                  "object '" + raw.objects[c] + "' has no identity arrow");
    }
  }

  for (ArrowId h = 0; h < n; ++h) {
    for (ArrowId g = 0; g < n; ++g) {
      const ArrowId hg = cat.table_[h * n + g];
      if (hg == kNoArrow) continue;
      for (ArrowId f = 0; f < n; ++f) {
        const ArrowId gf = cat.table_[g * n + f];
        if (gf == kNoArrow) continue;
        if (cat.table_[hg * n + f] != cat.table_[h * n + gf]) {
          throw Error(ErrorCode::AssociativityViolation,
                      "(" + cat.arrows_[h].name + "." + cat.arrows_[g].name + ")." +
                          cat.arrows_[f].name + " != " + cat.arrows_[h].name + ".(" +
                          cat.arrows_[g].name + "." + cat.arrows_[f].name + ")");
        }
      }
    }
  }
  cat.index();
  return cat;
}

bool same_base(const CategoryRef& a, const CategoryRef& b) {
  return a == b || (a && b && *a == *b);
}

FinMonoid::FinMonoid(std::vector<std::string> elements, std::size_t unit,
                     std::vector<std::size_t> table)
    : elements_(std::move(elements)), unit_(unit), table_(std::move(table)) {
  const std::size_t n = elements_.size();
  if (n == 0 || unit_ >= n || table_.size() != n * n) {
    throw Error(ErrorCode::MalformedInput, "monoid table has the wrong shape");
  }
  for (std::size_t v : table_) {
    if (v >= n) throw Error(ErrorCode::MalformedInput, "monoid table value out of range");
  }
  for (std::size_t m = 0; m < n; ++m) {
    if (multiply(unit_, m) != m || multiply(m, unit_) != m) {
      throw Error(ErrorCode::IdentityViolation,
                  "unit '" + elements_[unit_] + "' fails at '" + elements_[m] + "'");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
          throw Error(ErrorCode::AssociativityViolation,
                      "(" + elements_[a] + "." + elements_[b] + ")." + elements_[c] +
                          " != " + elements_[a] + ".(" + elements_[b] + "." +
                          elements_[c] + ")");
        }
      }
    }
  }
}

std::optional<std::size_t> FinMonoid::find(const std::string& name) const {
  const auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

RawMonoid FinMonoid::to_raw() const {
  RawMonoid raw;
  raw.elements = elements_;
  raw.unit = elements_[unit_];
  for (std::size_t m = 0; m < size(); ++m) {
    for (std::size_t k = 0; k < size(); ++k) {
      if (m == unit_ || k == unit_) continue;
      raw.table[{elements_[m], elements_[k]}] = elements_[multiply(m, k)];
    }
  }
  return raw;
}

FinMonoid validate_monoid(const RawMonoid& raw) {
  std::set<std::string> seen;
  for (const auto& e : raw.elements) {
    if (!seen.insert(e).second) {
      throw Error(ErrorCode::MalformedInput, "duplicate monoid element '" + e + "'");
    }
  }
  const auto index_of = [&](const std::string& name) -> std::size_t {
    const auto it = std::find(raw.elements.begin(), raw.elements.end(), name);
    if (it == raw.elements.end()) {
      throw Error(ErrorCode::MalformedInput, "undeclared monoid element '" + name + "'");
    }
    return static_cast<std::size_t>(it - raw.elements.begin());
  };
  const std::size_t n = raw.elements.size();
  const std::size_t unit = index_of(raw.unit);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> table(n * n, kUnset);
  for (const auto& [pair, result] : raw.table) {
    table[index_of(pair.first) * n + index_of(pair.second)] = index_of(result);
  }
  for (std::size_t m = 0; m < n; ++m) {
    if (table[unit * n + m] == kUnset) table[unit * n + m] = m;
    if (table[m * n + unit] == kUnset) table[m * n + unit] = m;
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (table[i] == kUnset) {
      throw Error(ErrorCode::MissingComposite,
                  "missing product '" + raw.elements[i / n] + "*" + raw.elements[i % n] + "'");
    }
  }
  return FinMonoid(raw.elements, unit, std::move(table));
}

CategoryRef monoid_to_category(const FinMonoid& m) {
  RawCategory raw;
  raw.objects = {"*"};
  for (const auto& name : m.elements()) raw.arrows.push_back({name, "*", "*"});
  raw.identities["*"] = m.name(m.unit());
  for (std::size_t g = 0; g < m.size(); ++g) {
    for (std::size_t f = 0; f < m.size(); ++f) {
      raw.compose[{m.name(g), m.name(f)}] = m.name(m.multiply(f, g));
    }
  }
  return std::make_shared<const FinCategory>(validate_category(raw));
}

CategoryRef trivial_category() {
  RawCategory raw;
  raw.objects = {"*"};
  raw.arrows = {{"id", "*", "*"}};
  raw.identities["*"] = "id";
  return std::make_shared<const FinCategory>(validate_category(raw));
}

CategoryRef arrow_category() {
  RawCategory raw;
  raw.objects = {"0", "1"};
  raw.arrows = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"u", "0", "1"}};
  raw.identities["0"] = "id0";
  raw.identities["1"] = "id1";
  return std::make_shared<const FinCategory>(validate_category(raw));
}

std::vector<FinMonoid> enumerate_monoids(std::size_t order) {
  std::vector<FinMonoid> result;
  if (order == 0) return result;
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i < order; ++i) names.push_back(std::string(1, static_cast<char>('a' + i - 1)));

  const std::size_t n = order;
  std::vector<std::size_t> free_cells;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) free_cells.push_back(i * n + j);
  }
  std::vector<std::size_t> table(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    table[i] = i;
    table[i * n] = i;
  }
  std::vector<std::size_t> perm(n);
  std::set<std::vector<std::size_t>> canonical_seen;

  auto associative = [&] {
    for (std::size_t a = 1; a < n; ++a)
      for (std::size_t b = 1; b < n; ++b)
        for (std::size_t c = 1; c < n; ++c)
          if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]]) return false;
    return true;
  };

  std::vector<std::size_t> digits(free_cells.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < free_cells.size(); ++k) table[free_cells[k]] = digits[k];
    if (associative()) {
      std::vector<std::size_t> best;
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<std::size_t> relabeled(n * n);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            relabeled[perm[a] * n + perm[b]] = perm[table[a * n + b]];
        if (best.empty() || relabeled < best) best = relabeled;
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
      if (canonical_seen.insert(best).second) {
        result.emplace_back(names, 0, best);
      }
    }
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == n) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return result;
}

}  // namespace toposbench
