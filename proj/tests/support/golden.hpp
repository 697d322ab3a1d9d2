#pragma once

// The example commands documented in README.md with their exact stdout and exit code.
// Arguments starting with '@' name files in samples/.

#include <string>
#include <vector>

#include "support/cli_runner.hpp"

namespace cumteam::gen {

struct GoldenCase {
  std::vector<std::string> args;
  std::string out;
  int code;
};

inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases{
      {{"eval", "--vars", "p,q,r", "--team", "100;010", "--formula", "dep(p;q)"}, "true\n", 0},
      {{"eval", "--vars", "p,q,r", "--team", "100;010", "--formula", "dep(r)"}, "true\n", 0},
      {{"eval", "--vars", "p,q,r", "--team", "100;010", "--formula", "dep(p) | dep(p)"}, "true\n", 0},
      {{"eval", "--vars", "p,q,r", "--team", "100;010", "--formula", "dep(p)"}, "false\n", 1},
      {{"eval", "--vars", "p", "--team", "", "--formula", "F"}, "true\n", 0},
      {{"eval", "--vars", "p", "--team", "1", "--formula", "~(p)"}, "", 2},
      {{"entail", "--model", "@trivial.json", "--phi", "T", "--psi", "p & q & r"}, "yes\n", 0},
      {{"entail", "--model", "@example1.json", "--phi", "T", "--psi", "dep(p;q)"}, "yes\n", 0},
      {{"entail", "--model", "@chain.json", "--phi", "p | dep(q)", "--psi", "p | dep(q)"}, "yes\n", 0},
      {{"entail", "--model", "@chain.json", "--phi", "p", "--psi", "q"}, "no: minimal state low does not satisfy q\n", 1},
      {{"verify", "--model", "@strict_order.json", "--mode", "all-subsets"}, "cumulative (all subsets): pass\n", 0},
      {{"verify", "--model", "@cycle.json", "--mode", "all-subsets"},
       "cumulative (all subsets): fail\n  witness {a,b}: a b\n", 1},
      {{"verify", "--model", "@strict_order.json", "--universe", "@universe.txt", "--strong"},
       "cumulative (universe): pass\nstrong cumulative: fail\n  witness unique minimum for p | q: b c\n", 1},
      {{"systemc", "--model", "@strict_order.json", "--universe", "@universe.txt", "--close-depth", "2"},
       "universe: 7 formulas, 26 pairs\nSystem C: pass\n", 0},
      {{"succ-entail", "--label", "@label_parity.circ", "--order", "@order_empty.circ", "--vars", "p", "--state-bits", "2",
        "--phi", "T", "--psi", "p"},
       "no: minimal state 00 does not satisfy p\n", 1},
      {{"succ-entail", "--label", "@label_parity.circ", "--order", "@order_numeric.circ", "--vars", "p", "--state-bits",
        "2", "--phi", "T", "--psi", "~p"},
       "yes\n", 0},
      {{"succ-entail", "--label", "@label_bad.circ", "--order", "@order_empty.circ", "--vars", "p", "--state-bits", "2",
        "--phi", "T", "--psi", "p"},
       "", 2},
  };
  return cases;
}

inline std::vector<std::string> resolve_args(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) out.push_back(!a.empty() && a[0] == '@' ? sample(a.substr(1)) : a);
  return out;
}

inline std::string command_text(const std::vector<std::string>& args) {
  std::string s = "cumteam";
  for (const auto& a : args) s += " " + (a.find_first_of(" ;|&~()") != std::string::npos || a.empty() ? shell_quote(a) : a);
  return s;
}

}  // namespace cumteam::gen
