#include <gtest/gtest.h>

#include <filesystem>

#include "cli/fixtures.hpp"
#include "toposbench/error.hpp"
#include "toposbench/io/model.hpp"
#include "toposbench/io/tm_json.hpp"

namespace toposbench::io {
namespace {

const std::filesystem::path kFixtures = TOPOSBENCH_FIXTURE_DIR;

ErrorCode model_error(const std::string& text) {
  try {
    parse_model(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::MalformedInput;
}

// Two presheaves P, Q over Z/2 = {1, s}, with s acting as given.
std::string z2_model(const std::string& p_action, const std::string& q_action, const std::string& extra) {
  return R"({"monoids": {"Z2": {"elements": ["1", "s"], "unit": "1",
                                "table": {"1*1": "1", "1*s": "s", "s*1": "s", "s*s": "1"}}},
             "presheaves": {"P": {"base": "Z2", "carriers": {"*": ["p", "q"]}, "action": {"s": {)" +
         p_action + R"(}}},
                            "Q": {"base": "Z2", "carriers": {"*": ["p", "q"]}, "action": {"s": {)" +
         q_action + "}}}}" + extra + "}";
}

TEST(Fixtures, ShippedFilesMatchGenerator) {
  const auto corpus = cli::fixture_corpus();
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
    if (entry.path().extension() == ".json") ++files;
  }
  EXPECT_EQ(files, corpus.size());
  for (const auto& [name, text] : corpus) EXPECT_EQ(read_file(kFixtures / name), text) << name;
}

// Property: parse, serialize and parse again is the identity on the corpus.
TEST(Fixtures, RoundTrip) {
  for (const auto& [name, text] : cli::fixture_corpus()) {
    if (name.rfind("tm_", 0) == 0) {
      const auto tm = parse_tm(text);
      EXPECT_EQ(serialize_tm(tm), text) << name;
      EXPECT_EQ(serialize_tm(parse_tm(serialize_tm(tm))), text);
    } else {
      const Model m = parse_model(text);
      EXPECT_EQ(serialize_model(m), text) << name;
      const Model again = parse_model(serialize_model(m));
      EXPECT_EQ(again.presheaves.size(), m.presheaves.size());
      for (const auto& [p, obj] : m.presheaves) EXPECT_TRUE(again.presheaf(p)->same_structure(*obj));
    }
  }
}

TEST(Model, FourStateLoads) {
  const Model m = load_model(kFixtures / "automaton.json");
  EXPECT_EQ(m.monoids.at("M").size(), 9u);
  EXPECT_EQ(m.presheaf("A")->size(0), 4u);
  EXPECT_EQ(m.presheaf("B3")->size(0), 3u);
  EXPECT_THROW(m.presheaf("nope"), Error);
}

TEST(Model, ArrowFixtureCarriesMorphismsAndSubobjects) {
  const Model m = load_model(kFixtures / "arrow.json");
  EXPECT_FALSE(m.morphism("F") == m.morphism("G"));
  EXPECT_TRUE(m.subobject("X_sub").is_full());
  EXPECT_EQ(m.morphism_ends.at("F"), "X->Y");
  EXPECT_EQ(m.presheaf("I")->total_size(), 0u);
}

TEST(Model, ErrorsAreClassified) {
  EXPECT_EQ(model_error(""), ErrorCode::MalformedInput);
  EXPECT_EQ(model_error("[]"), ErrorCode::MalformedInput);
  EXPECT_EQ(model_error(R"({"colour": 1})"), ErrorCode::MalformedInput);
  EXPECT_EQ(model_error(R"({"presheaves": {"P": {"base": "M", "carriers": {}, "action": {}}}})"),
            ErrorCode::MalformedInput);
  EXPECT_EQ(model_error(z2_model(R"("p": "p", "q": "p")", R"("p": "p", "q": "q")", "")),
            ErrorCode::FunctorViolation);
  const std::string bad_monoid = R"({
    "monoids": {"M": {"elements": ["1", "a", "b"], "unit": "1",
                      "table": {"1*1": "1", "1*a": "a", "1*b": "b", "a*1": "a", "b*1": "b",
                                "a*a": "b", "a*b": "a", "b*a": "a", "b*b": "a"}}}})";
  EXPECT_EQ(model_error(bad_monoid), ErrorCode::AssociativityViolation);
}

TEST(Model, BrokenNaturalitySquareNamesTheArrow) {
  const std::string morphism = R"(, "morphisms": {"h": {"source": "P", "target": "Q",
      "components": {"*": {"p": "p", "q": "q"}}}})";
  const std::string swap = R"("p": "q", "q": "p")";
  const std::string fixed = R"("p": "p", "q": "q")";
  EXPECT_NO_THROW(parse_model(z2_model(swap, swap, morphism)));
  try {
    parse_model(z2_model(swap, fixed, morphism));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NaturalityViolation);
    EXPECT_NE(std::string(e.what()).find("'s'"), std::string::npos) << e.what();
    return;
  }
  ADD_FAILURE() << "accepted";
}

TEST(TMJson, ParsesAndValidates) {
  const auto tm = load_tm(kFixtures / "tm_branch.json");
  EXPECT_EQ(tm.delta.at({"q0", "1"}).size(), 2u);
  EXPECT_EQ(tm.fin.name(), "kuratowski");
  EXPECT_THROW(parse_tm(R"({"states": ["q"], "alphabet": [" "], "q0": "q", "qf": "q", "delta": {"q": []}})"),
               Error);
  EXPECT_THROW(parse_tm(R"({"states": ["q"], "alphabet": [" "], "q0": "q", "qf": "r", "delta": {}})"), Error);
  EXPECT_THROW(parse_tm(R"({"states": ["q"], "alphabet": [" "], "q0": "q", "qf": "q", "delta": {},
                           "tape": []})"),
               Error);
  const auto with_fin = parse_tm(
      R"({"states": ["q"], "alphabet": [" "], "q0": "q", "qf": "q", "delta": {}, "fin": "lp:2"})");
  EXPECT_EQ(with_fin.fin.p, 2u);
}

TEST(TMJson, TapeView) {
  const auto tm = cli::tm_successor();
  machines::Configuration c = machines::initial_configuration(tm, "");
  machines::write_cell(c, 2, '1', ' ');
  machines::write_cell(c, -1, '1', ' ');
  const TapeView v = tape_view(tm, c);
  EXPECT_EQ(v.offset, -1);
  EXPECT_EQ(v.cells, (std::vector<std::string>{"1", " ", " ", "1"}));
  machines::write_cell(c, 2, ' ', ' ');
  EXPECT_EQ(tape_view(tm, c).cells, std::vector<std::string>{"1"});
  machines::write_cell(c, -1, ' ', ' ');
  EXPECT_TRUE(tape_view(tm, c).cells.empty());
  EXPECT_EQ(c.offset, 0);
}

}  // namespace
}  // namespace toposbench::io
