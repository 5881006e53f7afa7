#include "toposbench/io/model.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "toposbench/error.hpp"

namespace toposbench::io {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& message) {
  throw Error(ErrorCode::MalformedInput, message);
}

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) malformed(where + " must be an object");
}

void only_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) malformed(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) malformed("unknown key '" + key + "' in " + where);
  }
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) malformed("missing '" + std::string(key) + "' in " + where);
  return j.at(key);
}

std::string str(const json& j, const std::string& where) {
  if (!j.is_string()) malformed(where + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> strings(const json& j, const std::string& where) {
  if (!j.is_array()) malformed(where + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(str(e, where));
  return out;
}

// Splits "g<sep>f" into two known names; names may themselves contain sep.
std::pair<std::string, std::string> split_pair(const std::string& key, char sep,
                                               const std::set<std::string>& names,
                                               const std::string& where) {
  std::optional<std::pair<std::string, std::string>> found;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key[i] != sep) continue;
    std::string left = key.substr(0, i);
    std::string right = key.substr(i + 1);
    if (names.count(left) && names.count(right)) {
      if (found) malformed("ambiguous key '" + key + "' in " + where);
      found.emplace(std::move(left), std::move(right));
    }
  }
  if (!found) malformed("key '" + key + "' in " + where + " does not name two known arrows");
  return *found;
}

CategoryRef parse_category(const json& j) {
  only_keys(j, {"objects", "arrows", "identities", "compose"}, "category");
  RawCategory raw;
  raw.objects = strings(field(j, "objects", "category"), "category.objects");
  const json& arrows = field(j, "arrows", "category");
  if (!arrows.is_array()) malformed("category.arrows must be an array");
  std::set<std::string> names;
  for (const auto& a : arrows) {
    only_keys(a, {"name", "dom", "cod"}, "category.arrows[]");
    raw.arrows.push_back({str(field(a, "name", "arrow"), "arrow name"),
                          str(field(a, "dom", "arrow"), "arrow dom"),
                          str(field(a, "cod", "arrow"), "arrow cod")});
    names.insert(raw.arrows.back().name);
  }
  if (j.contains("identities")) {
    require_object(j.at("identities"), "category.identities");
    for (const auto& [obj, arrow] : j.at("identities").items()) {
      raw.identities[obj] = str(arrow, "category.identities");
    }
  }
  if (j.contains("compose")) {
    const json& compose = j.at("compose");
    if (!compose.is_object()) malformed("category.compose must be an object");
    for (const auto& [key, value] : compose.items()) {
      raw.compose[split_pair(key, '.', names, "category.compose")] = str(value, "category.compose");
    }
  }
  return std::make_shared<const FinCategory>(validate_category(raw));
}

FinMonoid parse_monoid(const json& j, const std::string& name) {
  const std::string where = "monoid '" + name + "'";
  only_keys(j, {"elements", "unit", "table"}, where);
  RawMonoid raw;
  raw.elements = strings(field(j, "elements", where), where + ".elements");
  raw.unit = str(field(j, "unit", where), where + ".unit");
  const std::set<std::string> names(raw.elements.begin(), raw.elements.end());
  const json& table = field(j, "table", where);
  if (!table.is_object()) malformed(where + ".table must be an object");
  for (const auto& [key, value] : table.items()) {
    raw.table[split_pair(key, '*', names, where + ".table")] = str(value, where + ".table");
  }
  return validate_monoid(raw);
}

PresheafRef parse_presheaf(const json& j, const std::string& name, const CategoryRef& base) {
  const std::string where = "presheaf '" + name + "'";
  only_keys(j, {"base", "carriers", "action"}, where);
  const FinCategory& cat = *base;
  const json& carriers = field(j, "carriers", where);
  require_object(carriers, where + ".carriers");
  std::vector<std::vector<std::string>> names(cat.object_count());
  for (const auto& [obj, elems] : carriers.items()) {
    const auto c = cat.find_object(obj);
    if (!c) malformed(where + " has a carrier for unknown object '" + obj + "'");
    names[*c] = strings(elems, where + ".carriers");
  }
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    if (!carriers.contains(cat.object_name(c))) {
      malformed(where + " has no carrier for object '" + cat.object_name(c) + "'");
    }
  }
  auto index_of = [&](ObjectId c, const std::string& x) -> Elem {
    for (Elem i = 0; i < names[c].size(); ++i) {
      if (names[c][i] == x) return i;
    }
    malformed(where + ": '" + x + "' is not in the carrier at " + cat.object_name(c));
  };
  const json empty = json::object();
  const json& action = j.contains("action") ? j.at("action") : empty;
  if (!action.is_object()) malformed(where + ".action must be an object");
  for (const auto& [arrow, table] : action.items()) {
    if (!cat.find_arrow(arrow)) malformed(where + " acts by unknown arrow '" + arrow + "'");
  }
  std::vector<std::vector<Elem>> act(cat.arrow_count());
  for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
    const auto& a = cat.arrow(f);
    if (!action.contains(a.name)) {
      if (!cat.is_identity(f)) malformed(where + " has no action for arrow '" + a.name + "'");
      for (Elem x = 0; x < names[a.dom].size(); ++x) act[f].push_back(x);
      continue;
    }
    const json& table = action.at(a.name);
    if (!table.is_object()) malformed(where + ".action." + a.name + " must be an object");
    act[f].assign(names[a.dom].size(), 0);
    std::vector<bool> seen(names[a.dom].size(), false);
    for (const auto& [x, y] : table.items()) {
      const Elem i = index_of(a.dom, x);
      act[f][i] = index_of(a.cod, str(y, where + ".action"));
      seen[i] = true;
    }
    for (Elem x = 0; x < seen.size(); ++x) {
      if (!seen[x]) malformed(where + ": arrow '" + a.name + "' is undefined on '" + names[a.dom][x] + "'");
    }
  }
  return make_presheaf(base, std::move(names), std::move(act));
}

Elem element_index(const Presheaf& p, ObjectId c, const std::string& x, const std::string& where) {
  const auto i = p.find_element(c, x);
  if (!i) malformed(where + ": '" + x + "' is not in the carrier at " + p.base()->object_name(c));
  return *i;
}

json category_json(const FinCategory& cat) {
  json out;
  out["objects"] = json::array();
  for (ObjectId c = 0; c < cat.object_count(); ++c) out["objects"].push_back(cat.object_name(c));
  out["arrows"] = json::array();
  out["identities"] = json::object();
  out["compose"] = json::object();
  for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
    const auto& a = cat.arrow(f);
    out["arrows"].push_back(
        {{"name", a.name}, {"dom", cat.object_name(a.dom)}, {"cod", cat.object_name(a.cod)}});
  }
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    out["identities"][cat.object_name(c)] = cat.arrow(cat.identity(c)).name;
  }
  for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
    for (ArrowId g : cat.arrows_from(cat.cod(f))) {
      out["compose"][cat.arrow(g).name + "." + cat.arrow(f).name] = cat.arrow(cat.compose(g, f)).name;
    }
  }
  return out;
}

}  // namespace

CategoryRef Model::base(const std::string& key) const {
  if (key == "category") {
    if (!category) throw Error(ErrorCode::UnknownObject, "the model has no category");
    return category;
  }
  const auto it = monoid_bases.find(key);
  if (it == monoid_bases.end()) throw Error(ErrorCode::UnknownObject, "unknown base '" + key + "'");
  return it->second;
}

PresheafRef Model::presheaf(const std::string& name) const {
  const auto it = presheaves.find(name);
  if (it == presheaves.end()) throw Error(ErrorCode::UnknownObject, "unknown presheaf '" + name + "'");
  return it->second;
}

const NatTrans& Model::morphism(const std::string& name) const {
  const auto it = morphisms.find(name);
  if (it == morphisms.end()) throw Error(ErrorCode::UnknownObject, "unknown morphism '" + name + "'");
  return it->second;
}

const Subfunctor& Model::subobject(const std::string& name) const {
  const auto it = subobjects.find(name);
  if (it == subobjects.end()) throw Error(ErrorCode::UnknownObject, "unknown subobject '" + name + "'");
  return it->second;
}

Model parse_model(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  only_keys(j, {"category", "monoids", "presheaves", "morphisms", "subobjects"}, "model");
  Model model;
  if (j.contains("category")) model.category = parse_category(j.at("category"));
  if (j.contains("monoids")) {
    require_object(j.at("monoids"), "monoids");
    for (const auto& [name, m] : j.at("monoids").items()) {
      if (name == "category") malformed("a monoid may not be called 'category'");
      FinMonoid monoid = parse_monoid(m, name);
      model.monoid_bases[name] = monoid_to_category(monoid);
      model.monoids.emplace(name, std::move(monoid));
    }
  }
  auto base_of = [&](const std::string& key) {
    try {
      return model.base(key);
    } catch (const Error&) {
      malformed("unknown base '" + key + "'");
    }
  };
  if (j.contains("presheaves")) {
    require_object(j.at("presheaves"), "presheaves");
    for (const auto& [name, p] : j.at("presheaves").items()) {
      const std::string key = str(field(p, "base", "presheaf '" + name + "'"), "presheaf base");
      model.presheaves[name] = parse_presheaf(p, name, base_of(key));
      model.presheaf_bases[name] = key;
    }
  }
  auto presheaf_of = [&](const std::string& name) {
    const auto it = model.presheaves.find(name);
    if (it == model.presheaves.end()) malformed("unknown presheaf '" + name + "'");
    return it->second;
  };
  if (j.contains("morphisms")) {
    require_object(j.at("morphisms"), "morphisms");
    for (const auto& [name, m] : j.at("morphisms").items()) {
      const std::string where = "morphism '" + name + "'";
      only_keys(m, {"source", "target", "components"}, where);
      const std::string s = str(field(m, "source", where), where + ".source");
      const std::string t = str(field(m, "target", where), where + ".target");
      const PresheafRef source = presheaf_of(s);
      const PresheafRef target = presheaf_of(t);
      if (!same_base(source->base(), target->base())) {
        throw Error(ErrorCode::BaseMismatch, where + " joins presheaves over different bases");
      }
      const FinCategory& cat = *source->base();
      const json& comps = field(m, "components", where);
      require_object(comps, where + ".components");
      std::vector<std::vector<Elem>> components(cat.object_count());
      for (ObjectId c = 0; c < cat.object_count(); ++c) {
        const std::string obj = cat.object_name(c);
        if (!comps.contains(obj)) {
          if (source->size(c) == 0) continue;
          malformed(where + " has no component at '" + obj + "'");
        }
        const json& table = comps.at(obj);
        if (!table.is_object()) malformed(where + " component must be an object");
        components[c].assign(source->size(c), 0);
        std::vector<bool> seen(source->size(c), false);
        for (const auto& [x, y] : table.items()) {
          const Elem i = element_index(*source, c, x, where);
          components[c][i] = element_index(*target, c, str(y, where), where);
          seen[i] = true;
        }
        for (Elem x = 0; x < seen.size(); ++x) {
          if (!seen[x]) malformed(where + " is undefined on '" + source->element_name(c, x) + "'");
        }
      }
      for (const auto& [obj, table] : comps.items()) {
        if (!cat.find_object(obj)) malformed(where + " has a component at unknown object '" + obj + "'");
      }
      model.morphisms.emplace(name, NatTrans(source, target, std::move(components)));
      model.morphism_ends[name] = s + "->" + t;
    }
  }
  if (j.contains("subobjects")) {
    require_object(j.at("subobjects"), "subobjects");
    for (const auto& [name, sj] : j.at("subobjects").items()) {
      const std::string where = "subobject '" + name + "'";
      only_keys(sj, {"host", "elements"}, where);
      const std::string h = str(field(sj, "host", where), where + ".host");
      const PresheafRef host = presheaf_of(h);
      const FinCategory& cat = *host->base();
      std::vector<std::vector<bool>> part(cat.object_count());
      for (ObjectId c = 0; c < cat.object_count(); ++c) part[c].assign(host->size(c), false);
      const json& elems = field(sj, "elements", where);
      require_object(elems, where + ".elements");
      for (const auto& [obj, xs] : elems.items()) {
        const auto c = cat.find_object(obj);
        if (!c) malformed(where + " lists unknown object '" + obj + "'");
        for (const auto& x : strings(xs, where)) part[*c][element_index(*host, *c, x, where)] = true;
      }
      model.subobjects.emplace(name, Subfunctor(host, std::move(part)));
      model.subobject_hosts[name] = h;
    }
  }
  return model;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Model load_model(const std::filesystem::path& path) { return parse_model(read_file(path)); }

std::string serialize_model(const Model& model) {
  json out = json::object();
  if (model.category) out["category"] = category_json(*model.category);
  for (const auto& [name, m] : model.monoids) {
    json mj;
    mj["elements"] = m.elements();
    mj["unit"] = m.name(m.unit());
    mj["table"] = json::object();
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b = 0; b < m.size(); ++b) {
        mj["table"][m.name(a) + "*" + m.name(b)] = m.name(m.multiply(a, b));
      }
    }
    out["monoids"][name] = mj;
  }
  for (const auto& [name, p] : model.presheaves) {
    const FinCategory& cat = *p->base();
    json pj;
    pj["base"] = model.presheaf_bases.at(name);
    pj["carriers"] = json::object();
    pj["action"] = json::object();
    for (ObjectId c = 0; c < cat.object_count(); ++c) {
      json carrier = json::array();
      for (Elem x = 0; x < p->size(c); ++x) carrier.push_back(p->element_name(c, x));
      pj["carriers"][cat.object_name(c)] = carrier;
    }
    for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
      json table = json::object();
      const auto& a = cat.arrow(f);
      for (Elem x = 0; x < p->size(a.dom); ++x) {
        table[p->element_name(a.dom, x)] = p->element_name(a.cod, p->act(f, x));
      }
      pj["action"][a.name] = table;
    }
    out["presheaves"][name] = pj;
  }
  for (const auto& [name, m] : model.morphisms) {
    const std::string& ends = model.morphism_ends.at(name);
    const std::size_t arrow = ends.find("->");
    json mj;
    mj["source"] = ends.substr(0, arrow);
    mj["target"] = ends.substr(arrow + 2);
    mj["components"] = json::object();
    const FinCategory& cat = *m.source()->base();
    for (ObjectId c = 0; c < cat.object_count(); ++c) {
      json table = json::object();
      for (Elem x = 0; x < m.source()->size(c); ++x) {
        table[m.source()->element_name(c, x)] = m.target()->element_name(c, m(c, x));
      }
      mj["components"][cat.object_name(c)] = table;
    }
    out["morphisms"][name] = mj;
  }
  for (const auto& [name, s] : model.subobjects) {
    json sj;
    sj["host"] = model.subobject_hosts.at(name);
    sj["elements"] = json::object();
    const FinCategory& cat = *s.host()->base();
    for (ObjectId c = 0; c < cat.object_count(); ++c) {
      json xs = json::array();
      for (Elem x : s.elements(c)) xs.push_back(s.host()->element_name(c, x));
      sj["elements"][cat.object_name(c)] = xs;
    }
    out["subobjects"][name] = sj;
  }
  return out.dump(2) + "\n";
}

}  // namespace toposbench::io
