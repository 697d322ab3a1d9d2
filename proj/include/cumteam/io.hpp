#pragma once

// File formats: relational models as JSON, formula universes as text.
//
// Model JSON:
//   {
//     "vars":   ["p", "q"],
//     "states": { "a": [ [ {"p": 1, "q": 0} ], [] ], "b": [] },
//     "order":  [ ["a", "b"] ]
//   }
// "states" maps a state id to its label, a list of teams; a team is a list of
// valuation objects assigning 0 or 1 to every variable. ["a", "b"] means a R b
// (a is preferred). State order follows the file.
//
// Universe files hold one formula per line; blank lines and '#' comments are ignored.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>  // nlohmann/json, vendored

#include "cumteam/errors.hpp"
#include "cumteam/formula.hpp"
#include "cumteam/relmodel.hpp"
#include "cumteam/teams.hpp"

namespace cumteam {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

using ojson = nlohmann::ordered_json;

inline Team team_from_json(const Domain& d, const ojson& j, const std::string& where) {
  if (!j.is_array()) throw ModelError(where + ": a team must be a list of valuations");
  std::vector<ValuationCode> codes;
  for (const auto& v : j) {
    if (!v.is_object()) throw ModelError(where + ": a valuation must be an object");
    ValuationCode code = 0;
    for (auto it = v.begin(); it != v.end(); ++it)
      if (!is_variable_name(it.key()) || !d.index_of(Variable(it.key())))
        throw ModelError(where + ": unknown variable '" + it.key() + "'");
    for (std::size_t i = 0; i < d.size(); ++i) {
      auto it = v.find(d[i].name());
      if (it == v.end()) throw ModelError(where + ": valuation misses variable '" + d[i].name() + "'");
      int bit = -1;
      if (it->is_boolean()) bit = it->get<bool>() ? 1 : 0;
      else if (it->is_number_integer()) bit = it->get<int>();
      if (bit != 0 && bit != 1) throw ModelError(where + ": variable '" + d[i].name() + "' must be 0 or 1");
      if (bit) code |= d.bit_of(i);
    }
    codes.push_back(code);
  }
  return Team(d, std::move(codes));
}

inline ojson team_to_json(const Team& t) {
  ojson out = ojson::array();
  for (const auto& v : t.valuations()) {
    ojson val = ojson::object();
    for (std::size_t i = 0; i < t.domain().size(); ++i) val[t.domain()[i].name()] = v[i] ? 1 : 0;
    out.push_back(std::move(val));
  }
  return out;
}

}  // namespace detail

inline RelationalModel model_from_json_text(std::string_view text) {
  detail::ojson j;
  try {
    j = detail::ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelError(std::string("model is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ModelError("model must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "vars" && it.key() != "states" && it.key() != "order")
      throw ModelError("unknown key '" + it.key() + "' in model");
  if (!j.contains("vars") || !j.contains("states")) throw ModelError("model needs \"vars\" and \"states\"");

  const auto& jv = j["vars"];
  if (!jv.is_array()) throw ModelError("\"vars\" must be a list of variable names");
  std::vector<Variable> vars;
  for (const auto& v : jv) {
    if (!v.is_string() || !is_variable_name(v.get<std::string>()))
      throw ModelError("invalid variable name in \"vars\": " + v.dump());
    vars.emplace_back(v.get<std::string>());
  }
  Domain d = [&] {
    try {
      return Domain(std::move(vars));
    } catch (const DomainError& e) {
      throw ModelError(e.what());
    }
  }();

  const auto& js = j["states"];
  if (!js.is_object()) throw ModelError("\"states\" must map state ids to labels");
  std::vector<RelationalModel::State> states;
  for (auto it = js.begin(); it != js.end(); ++it) {
    if (!it.value().is_array()) throw ModelError("label of state '" + it.key() + "' must be a list of teams");
    RelationalModel::State s{it.key(), {}};
    for (const auto& t : it.value()) s.label.push_back(detail::team_from_json(d, t, "state '" + it.key() + "'"));
    states.push_back(std::move(s));
  }

  std::vector<std::pair<std::string, std::string>> order;
  if (j.contains("order")) {
    const auto& jo = j["order"];
    if (!jo.is_array()) throw ModelError("\"order\" must be a list of [lower, higher] pairs");
    for (const auto& p : jo) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        throw ModelError("order entry " + p.dump() + " must be a pair of state ids");
      order.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  return RelationalModel::with_ids(std::move(d), std::move(states), order);
}

inline RelationalModel load_model(const std::string& path) { return model_from_json_text(read_file(path)); }

inline std::string model_to_json_text(const RelationalModel& m, int indent = 2) {
  detail::ojson j = detail::ojson::object();
  j["vars"] = detail::ojson::array();
  for (const auto& v : m.domain()) j["vars"].push_back(v.name());
  j["states"] = detail::ojson::object();
  for (StateIndex s = 0; s < m.state_count(); ++s) {
    detail::ojson label = detail::ojson::array();
    for (const auto& t : m.label(s)) label.push_back(detail::team_to_json(t));
    j["states"][m.id(s)] = std::move(label);
  }
  j["order"] = detail::ojson::array();
  for (auto [lo, hi] : m.rel()) j["order"].push_back({m.id(lo), m.id(hi)});
  return j.dump(indent);
}

inline std::vector<Formula> parse_universe(std::string_view text) {
  std::vector<Formula> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse(line));
    } catch (const ParseError& e) {
      throw ModelError("universe line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<Formula> load_universe(const std::string& path) { return parse_universe(read_file(path)); }

}  // namespace cumteam
