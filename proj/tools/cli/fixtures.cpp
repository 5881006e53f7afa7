#include "fixtures.hpp"

#include <fstream>

#include "toposbench/error.hpp"
#include "toposbench/io/tm_json.hpp"
#include "toposbench/limits.hpp"
#include "toposbench/machines/automaton.hpp"

namespace toposbench::cli {

namespace {

void add_monoid(io::Model& m, const std::string& name, const FinMonoid& monoid,
                const CategoryRef& base) {
  m.monoids.emplace(name, monoid);
  m.monoid_bases[name] = base;
}

void add_presheaf(io::Model& m, const std::string& name, const std::string& base, PresheafRef p) {
  m.presheaves[name] = std::move(p);
  m.presheaf_bases[name] = base;
}

io::Model monoid_model(const FinMonoid& monoid, const std::string& name, PresheafRef p) {
  io::Model m;
  add_monoid(m, "M", monoid, p->base());
  add_presheaf(m, name, "M", std::move(p));
  return m;
}

}  // namespace

io::Model automaton_model() {
  const machines::MSet mset = machines::joint_mset(
      {machines::four_state_automaton(), machines::probe_automaton(1), machines::probe_automaton(2),
       machines::probe_automaton(3)});
  io::Model m;
  add_monoid(m, "M", mset.monoid, mset.base);
  const char* names[] = {"A", "B1", "B2", "B3"};
  for (std::size_t i = 0; i < mset.parts.size(); ++i) add_presheaf(m, names[i], "M", mset.parts[i]);
  return m;
}

io::Model arrow_model() {
  io::Model m;
  m.category = arrow_category();
  const CategoryRef& base = m.category;
  // Arrows: id0, id1, u.
  auto x = make_presheaf(base, std::vector<std::vector<std::string>>{{}, {"a"}},
                         std::vector<std::vector<Elem>>{{}, {0}, {}});
  auto y = make_presheaf(base, std::vector<std::vector<std::string>>{{"b1", "b2"}, {"b1", "b2"}},
                         std::vector<std::vector<Elem>>{{0, 1}, {0, 1}, {0, 1}});
  add_presheaf(m, "X", "category", x);
  add_presheaf(m, "Y", "category", y);
  add_presheaf(m, "I", "category", initial(base));
  m.morphisms.emplace("F", NatTrans(x, y, {{}, {0}}));
  m.morphisms.emplace("G", NatTrans(x, y, {{}, {1}}));
  m.morphism_ends["F"] = "X->Y";
  m.morphism_ends["G"] = "X->Y";
  m.subobjects.emplace("X_sub", Subfunctor::full(x));
  m.subobject_hosts["X_sub"] = "X";
  return m;
}

io::Model chain_model(std::size_t p) {
  const FinMonoid monoid = machines::chain_monoid(p);
  const CategoryRef base = monoid_to_category(monoid);
  return monoid_model(monoid, "chainM", representable(base, 0));
}

io::Model trunc_model(std::size_t n) {
  const PresheafRef c = machines::truncated_free_action(n);
  return monoid_model(machines::powerset_union_monoid(n), "C", c);
}

io::Model sets_model() {
  io::Model m;
  m.category = trivial_category();
  add_presheaf(m, "anySet", "category",
               make_presheaf(m.category, std::vector<std::vector<std::string>>{{"a", "b", "c"}},
                             std::vector<std::vector<Elem>>{{0, 1, 2}}));
  add_presheaf(m, "empty", "category", initial(m.category));
  return m;
}

machines::TMSpec tm_successor() {
  machines::TMSpec tm;
  tm.states = {"q0", "qf"};
  tm.alphabet = {" ", "1"};
  tm.q0 = "q0";
  tm.qf = "qf";
  tm.delta[{"q0", "1"}] = {{"q0", "1", machines::Move::R}};
  tm.delta[{"q0", " "}] = {{"qf", "1", machines::Move::R}};
  return tm;
}

machines::TMSpec tm_halt() {
  machines::TMSpec tm;
  tm.states = {"h"};
  tm.alphabet = {" ", "0", "1"};
  tm.q0 = "h";
  tm.qf = "h";
  return tm;
}

machines::TMSpec tm_branch() {
  machines::TMSpec tm;
  tm.states = {"q0", "qf"};
  tm.alphabet = {" ", "1", "a", "b"};
  tm.q0 = "q0";
  tm.qf = "qf";
  tm.delta[{"q0", "1"}] = {{"qf", "a", machines::Move::R}, {"qf", "b", machines::Move::R}};
  return tm;
}

std::map<std::string, std::string> fixture_corpus() {
  std::map<std::string, std::string> out;
  out["automaton.json"] = io::serialize_model(automaton_model());
  out["arrow.json"] = io::serialize_model(arrow_model());
  for (std::size_t p : {2, 3}) out["chain_" + std::to_string(p) + ".json"] = io::serialize_model(chain_model(p));
  for (std::size_t n : {1, 2, 3}) out["trunc_" + std::to_string(n) + ".json"] = io::serialize_model(trunc_model(n));
  out["sets.json"] = io::serialize_model(sets_model());
  out["tm_successor.json"] = io::serialize_tm(tm_successor());
  out["tm_halt.json"] = io::serialize_tm(tm_halt());
  out["tm_branch.json"] = io::serialize_tm(tm_branch());
  return out;
}

std::size_t write_fixtures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto corpus = fixture_corpus();
  for (const auto& [name, text] : corpus) {
    std::ofstream file(dir / name, std::ios::binary);
    file << text;
    if (!file) throw Error(ErrorCode::MalformedInput, "cannot write " + (dir / name).string());
  }
  return corpus.size();
}

}  // namespace toposbench::cli
