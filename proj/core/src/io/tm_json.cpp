#include "toposbench/io/tm_json.hpp"

#include <json.hpp>

#include "toposbench/error.hpp"
#include "toposbench/io/model.hpp"

namespace toposbench::io {

using nlohmann::json;
using machines::Move;

namespace {

[[noreturn]] void malformed(const std::string& message) {
  throw Error(ErrorCode::MalformedInput, message);
}

std::string str(const json& j, const std::string& where) {
  if (!j.is_string()) malformed(where + " must be a string");
  return j.get<std::string>();
}

}  // namespace

machines::TMSpec parse_tm(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) malformed("a machine must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "states" && key != "alphabet" && key != "blank" && key != "q0" && key != "qf" &&
        key != "delta" && key != "fin") {
      malformed("unknown key '" + key + "' in machine");
    }
  }
  for (const char* key : {"states", "alphabet", "q0", "qf", "delta"}) {
    if (!j.contains(key)) malformed(std::string("missing '") + key + "' in machine");
  }
  machines::TMSpec tm;
  for (const char* key : {"states", "alphabet"}) {
    if (!j.at(key).is_array()) malformed(std::string(key) + " must be an array");
  }
  for (const auto& s : j.at("states")) tm.states.push_back(str(s, "states[]"));
  for (const auto& s : j.at("alphabet")) tm.alphabet.push_back(str(s, "alphabet[]"));
  if (j.contains("blank")) tm.blank = str(j.at("blank"), "blank");
  tm.q0 = str(j.at("q0"), "q0");
  tm.qf = str(j.at("qf"), "qf");
  tm.fin = finiteness::FinitenessNotion::parse(j.contains("fin") ? str(j.at("fin"), "fin") : "kuratowski");
  const json& delta = j.at("delta");
  if (!delta.is_object()) malformed("delta must be an object");
  for (const auto& [key, rules] : delta.items()) {
    const std::size_t comma = key.find(',');
    if (comma == std::string::npos) malformed("delta key '" + key + "' is not of the form q,s");
    auto& out = tm.delta[{key.substr(0, comma), key.substr(comma + 1)}];
    if (!rules.is_array()) malformed("delta['" + key + "'] must be an array");
    for (const auto& r : rules) {
      if (!r.is_array() || r.size() != 3) malformed("delta rules are [state, symbol, move]");
      const std::string move = str(r[2], "move");
      if (move != "L" && move != "R") malformed("move must be L or R");
      out.push_back({str(r[0], "state"), str(r[1], "symbol"), move == "L" ? Move::L : Move::R});
    }
  }
  machines::validate_tm(tm);
  return tm;
}

machines::TMSpec load_tm(const std::filesystem::path& path) { return parse_tm(read_file(path)); }

std::string serialize_tm(const machines::TMSpec& tm) {
  json out;
  out["states"] = tm.states;
  out["alphabet"] = tm.alphabet;
  out["blank"] = tm.blank;
  out["q0"] = tm.q0;
  out["qf"] = tm.qf;
  out["fin"] = tm.fin.name();
  out["delta"] = json::object();
  for (const auto& [key, rules] : tm.delta) {
    json list = json::array();
    for (const auto& r : rules) list.push_back({r.state, r.symbol, r.move == Move::L ? "L" : "R"});
    out["delta"][key.first + "," + key.second] = list;
  }
  return out.dump(2) + "\n";
}

TapeView tape_view(const machines::TMSpec&, const machines::Configuration& c) {
  TapeView view{c.offset, {}};
  for (const char cell : c.cells) view.cells.emplace_back(1, cell);
  return view;
}

}  // namespace toposbench::io
