// cumteam: command-line front end.
//
// Exit codes: 0 = true / entails / pass, 1 = false / does not entail / fail, 2 = error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cumteam/cumteam.hpp"

namespace {

using namespace cumteam;
using json = nlohmann::ordered_json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Output {
  bool quiet = false;
  bool as_json = false;

  void line(const std::string& s) const {
    if (!quiet && !as_json) std::cout << s << '\n';
  }
  void emit(const json& j) const {
    if (as_json && !quiet) std::cout << j.dump(2) << '\n';
  }
};

json report_json(const VerificationReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back({{"subject", x.subject}, {"states", x.states}});
  return {{"property", r.property}, {"passed", r.passed}, {"witnesses", w}, {"notes", r.notes}};
}

void print_report(const Output& out, const VerificationReport& r) {
  if (out.quiet || out.as_json) return;
  std::cout << r;
}

Domain parse_vars_option(const std::string& s) {
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const auto n = std::stoul(s);
    if (n == 0 || n > kMaxDomainSize) throw DomainError("variable count must be in 1.." + std::to_string(kMaxDomainSize));
    std::vector<Variable> vars;
    for (std::size_t i = 1; i <= n; ++i) vars.emplace_back("p" + std::to_string(i));
    return Domain(std::move(vars));
  }
  return Domain::parse(s);
}

std::vector<Formula> entailment_universe(const Formula& phi, const Formula& psi) {
  return {phi, psi, Formula::conj(phi, psi)};
}

void warn_if_not_cumulative(const Output& out, const VerificationReport& r) {
  if (r.passed) return;
  std::cerr << "warning: model is not cumulative on {phi, psi, phi & psi}\n";
  if (!out.quiet) std::cerr << r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cumulative entailment over team-based propositional logics"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--quiet,-q", out.quiet, "Suppress output; rely on the exit code");
  app.add_flag("--json", out.as_json, "Machine-readable output");

  // eval
  auto* eval = app.add_subcommand("eval", "Model-check a formula on a team");
  std::string vars, team_literal, formula_text, engine = "generic";
  eval->add_option("--vars", vars, "Domain, e.g. p,q,r")->required();
  eval->add_option("--team", team_literal, "Team literal, e.g. '100;010' ('' is the empty team)")->required();
  eval->add_option("--formula", formula_text, "Formula")->required();
  eval->add_option("--engine", engine, "generic | flat | oracle")
      ->check(CLI::IsMember({"generic", "flat", "oracle"}));

  // entail
  auto* entail = app.add_subcommand("entail", "Decide phi |~ psi in an explicit model");
  std::string model_path, phi_text, psi_text, logic_text = "pdl", entail_engine = "direct";
  bool verify_first = false;
  entail->add_option("--model", model_path, "Model JSON file")->required();
  entail->add_option("--phi", phi_text, "Premise")->required();
  entail->add_option("--psi", psi_text, "Conclusion")->required();
  entail->add_option("--engine", entail_engine, "direct | oracle")->check(CLI::IsMember({"direct", "oracle"}));
  entail->add_option("--logic", logic_text, "pdl | tpl")->check(CLI::IsMember({"pdl", "tpl"}));
  entail->add_flag("--verify", verify_first, "Check cumulativity on {phi, psi, phi & psi} first");

  // verify
  auto* verify = app.add_subcommand("verify", "Check cumulativity of an explicit model");
  std::string mode = "universe", universe_path;
  bool strong = false;
  verify->add_option("--model", model_path, "Model JSON file")->required();
  verify->add_option("--mode", mode, "universe | all-subsets")->check(CLI::IsMember({"universe", "all-subsets"}));
  verify->add_option("--universe", universe_path, "Universe file (one formula per line)");
  verify->add_option("--logic", logic_text, "pdl | tpl")->check(CLI::IsMember({"pdl", "tpl"}));
  verify->add_flag("--strong", strong, "Also check strong cumulativity over the universe");

  // systemc
  auto* systemc = app.add_subcommand("systemc", "Check the induced relation against System C");
  std::size_t close_rounds = 2;
  systemc->add_option("--model", model_path, "Model JSON file")->required();
  systemc->add_option("--universe", universe_path, "Universe file")->required();
  systemc->add_option("--logic", logic_text, "pdl | tpl")->check(CLI::IsMember({"pdl", "tpl"}));
  systemc->add_option("--close-depth", close_rounds, "Rounds of conjunction closure applied to the universe");

  // succ-entail
  auto* succ = app.add_subcommand("succ-entail", "Decide phi |~ psi in a circuit-encoded model");
  std::string label_path, order_path;
  std::size_t state_bits = 0;
  succ->add_option("--label", label_path, "Label circuit netlist")->required();
  succ->add_option("--order", order_path, "Order circuit netlist")->required();
  succ->add_option("--vars", vars, "Domain: variable list p,q or a count n (p1..pn)")->required();
  succ->add_option("--state-bits", state_bits, "State bit count m")->required();
  succ->add_option("--phi", phi_text, "Premise")->required();
  succ->add_option("--psi", psi_text, "Conclusion")->required();
  succ->add_option("--logic", logic_text, "pdl | tpl")->check(CLI::IsMember({"pdl", "tpl"}));
  succ->add_flag("--verify", verify_first, "Check cumulativity of the expanded model first");

  // bench
  auto* bench = app.add_subcommand("bench", "Time model checking as teams grow");
  BenchConfig cfg;
  std::string family = "random";
  bench->add_option("--logic", logic_text, "tpl | pdl")->check(CLI::IsMember({"pdl", "tpl"}));
  bench->add_option("--family", family, "random | split")->check(CLI::IsMember({"random", "split"}));
  bench->add_option("--min-team-size", cfg.min_team_size, "Smallest team size");
  bench->add_option("--max-team-size", cfg.max_team_size, "Largest team size")->required();
  bench->add_option("--trials", cfg.trials, "Random instances per team size");
  bench->add_option("--seed", cfg.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kError;
  }

  try {
    const Logic logic = parse_logic(logic_text);

    if (*eval) {
      const Domain d = Domain::parse(vars);
      const Team t = Team::parse(d, team_literal);
      const Formula f = parse(formula_text);
      bool result = false;
      if (engine == "flat") result = eval_team_flat(t, f);
      else if (engine == "oracle") result = oracle::oracle_eval_team(t, f);
      else result = eval_team(t, f);
      out.line(result ? "true" : "false");
      out.emit({{"command", "eval"}, {"engine", engine}, {"result", result}});
      return result ? kYes : kNo;
    }

    if (*entail) {
      const RelationalModel m = load_model(model_path);
      const Formula phi = parse(phi_text), psi = parse(psi_text);
      if (logic == Logic::tpl && (!is_pl(phi) || !is_pl(psi)))
        throw DomainError("--logic tpl requires formulas without dependence atoms");
      json j{{"command", "entail"}, {"engine", entail_engine}, {"logic", to_string(logic)}};
      if (verify_first) {
        auto r = verify_cumulative(m, entailment_universe(phi, psi), logic);
        warn_if_not_cumulative(out, r);
        j["verification"] = report_json(r);
      }
      bool holds = false;
      std::optional<std::string> witness;
      if (entail_engine == "oracle") {
        holds = oracle::oracle_entails(m, phi, psi);
      } else {
        auto a = check_entailment(m, phi, psi, logic);
        holds = a.holds;
        if (a.violating_state) witness = m.id(*a.violating_state);
      }
      if (holds) out.line("yes");
      else if (witness) out.line("no: minimal state " + *witness + " does not satisfy " + render(psi));
      else out.line("no");
      j["result"] = holds;
      j["violating_state"] = witness ? json(*witness) : json(nullptr);
      out.emit(j);
      return holds ? kYes : kNo;
    }

    if (*verify) {
      const RelationalModel m = load_model(model_path);
      std::vector<Formula> universe;
      if (!universe_path.empty()) universe = load_universe(universe_path);
      else if (mode == "universe" || strong)
        throw ModelError("--universe is required for universe mode and --strong");
      std::vector<VerificationReport> reports;
      reports.push_back(mode == "all-subsets" ? verify_cumulative_all_subsets(m)
                                              : verify_cumulative(m, universe, logic));
      if (strong) reports.push_back(verify_strong_cumulative(m, universe, logic));
      bool passed = true;
      json j = json::array();
      for (const auto& r : reports) {
        print_report(out, r);
        j.push_back(report_json(r));
        passed = passed && r.passed;
      }
      out.emit({{"command", "verify"}, {"passed", passed}, {"reports", j}});
      return passed ? kYes : kNo;
    }

    if (*systemc) {
      const RelationalModel m = load_model(model_path);
      auto universe = conjunction_closure(m.domain(), load_universe(universe_path), logic, close_rounds);
      const auto rel = induced_relation(m, universe, logic);
      const auto r = check_system_c(rel);
      if (!out.quiet && !out.as_json)
        std::cout << "universe: " << universe.size() << " formulas, " << rel.pairs().size() << " pairs\n";
      print_report(out, r);
      out.emit({{"command", "systemc"}, {"universe_size", universe.size()}, {"report", report_json(r)}});
      return r.passed ? kYes : kNo;
    }

    if (*succ) {
      const Domain d = parse_vars_option(vars);
      const SuccinctModel sm(d, state_bits, parse_circuit(read_file(label_path)),
                             parse_circuit(read_file(order_path)));
      const auto validation = validate_succinct(sm);
      if (!validation.passed) {
        std::cerr << "error: invalid circuit-encoded model\n" << validation;
        return kError;
      }
      const Formula phi = parse(phi_text), psi = parse(psi_text);
      json j{{"command", "succ-entail"}, {"logic", to_string(logic)}};
      if (verify_first) {
        auto r = verify_cumulative(expand(sm), entailment_universe(phi, psi), logic);
        warn_if_not_cumulative(out, r);
        j["verification"] = report_json(r);
      }
      const auto a = check_succ_entailment(sm, phi, psi, logic);
      if (a.holds) out.line("yes");
      else out.line("no: minimal state " + sm.state_id(*a.violating_state) + " does not satisfy " + render(psi));
      j["result"] = a.holds;
      j["violating_state"] = a.violating_state ? json(sm.state_id(*a.violating_state)) : json(nullptr);
      out.emit(j);
      return a.holds ? kYes : kNo;
    }

    if (*bench) {
      cfg.logic = logic;
      cfg.family = parse_bench_family(family);
      const auto rows = run_bench(cfg);
      json j = json::array();
      out.line("logic team_size formula_size median_ns");
      for (const auto& r : rows) {
        out.line(std::string(to_string(r.logic)) + " " + std::to_string(r.team_size) + " " +
                 std::to_string(r.formula_size) + " " + std::to_string(r.median_ns));
        j.push_back({{"logic", to_string(r.logic)},
                     {"team_size", r.team_size},
                     {"formula_size", r.formula_size},
                     {"median_ns", r.median_ns}});
      }
      out.emit(j);
      return kYes;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
