#pragma once

// Classical and team semantics for PL and PDL formulas, plus exhaustive
// checkers for the empty-team, downward-closure, and flatness properties.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cumteam/errors.hpp"
#include "cumteam/formula.hpp"
#include "cumteam/teams.hpp"

namespace cumteam {

// Underlying team logic: PDL admits dependence atoms, TPL is PL under team semantics.
enum class Logic { pdl, tpl };

inline std::string_view to_string(Logic l) { return l == Logic::pdl ? "pdl" : "tpl"; }

inline Logic parse_logic(std::string_view s) {
  if (s == "pdl") return Logic::pdl;
  if (s == "tpl") return Logic::tpl;
  throw DomainError("unknown logic '" + std::string(s) + "' (expected pdl or tpl)");
}

struct EvalLimits {
  std::size_t max_team_size = 20;
};

inline constexpr std::size_t kHardMaxTeamSize = 30;

namespace detail {

// Formula with variables resolved to valuation-code bits of a fixed domain.
struct CompiledFormula {
  struct Node {
    Kind kind;
    ValuationCode bit = 0;       // literal variable, or dep target
    ValuationCode arg_bits = 0;  // dep args
    std::uint32_t left = 0;
    std::uint32_t right = 0;
  };

  std::vector<Node> nodes;
  std::uint32_t root = 0;

  CompiledFormula(const Formula& f, const Domain& d) { root = add(f, d); }

  bool classical(std::uint32_t i, ValuationCode v) const {
    const Node& n = nodes[i];
    switch (n.kind) {
      case Kind::top: return true;
      case Kind::bottom: return false;
      case Kind::pos_lit: return (v & n.bit) != 0;
      case Kind::neg_lit: return (v & n.bit) == 0;
      case Kind::conj: return classical(n.left, v) && classical(n.right, v);
      case Kind::disj: return classical(n.left, v) || classical(n.right, v);
      case Kind::dep: break;
    }
    throw DomainError("dependence atom has no classical semantics");
  }

  bool classical(ValuationCode v) const { return classical(root, v); }

 private:
  std::uint32_t add(const Formula& f, const Domain& d) {
    Node n{f.kind()};
    switch (f.kind()) {
      case Kind::pos_lit:
      case Kind::neg_lit: n.bit = d.bit_of(d.require_index(f.var())); break;
      case Kind::dep:
        for (const auto& a : f.dep_args()) n.arg_bits |= d.bit_of(d.require_index(a));
        n.bit = d.bit_of(d.require_index(f.dep_target()));
        break;
      case Kind::conj:
      case Kind::disj:
        n.left = add(f.left(), d);
        n.right = add(f.right(), d);
        break;
      default: break;
    }
    nodes.push_back(n);
    return static_cast<std::uint32_t>(nodes.size() - 1);
  }
};

inline void require_pl(const Formula& f, std::string_view what) {
  if (!is_pl(f)) throw DomainError(std::string(what) + " requires a formula without dependence atoms");
}

}  // namespace detail

inline bool eval_classical(const Valuation& v, const Formula& f) {
  detail::require_pl(f, "classical evaluation");
  return detail::CompiledFormula(f, v.domain()).classical(v.code());
}

// For all v, v' in t: v and v' agree on args implies they agree on target.
inline bool check_dep(const Team& t, const std::vector<Variable>& args, const Variable& target) {
  const Domain& d = t.domain();
  ValuationCode arg_bits = 0;
  for (const auto& a : args) arg_bits |= d.bit_of(d.require_index(a));
  const ValuationCode target_bit = d.bit_of(d.require_index(target));
  const auto& m = t.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if ((m[i] & arg_bits) == (m[j] & arg_bits) && (m[i] & target_bit) != (m[j] & target_bit)) return false;
  return true;
}

// Team-semantics evaluator for one formula over all subteams of a base team.
// Subteams are bitmasks over the base team's member positions. Disjunction
// searches the 2^|Y| splits (Y', Y \ Y'); by downward closure this is
// equivalent to searching all covers. Results are memoized per (subformula, subteam)
// for the lifetime of the evaluator.
class TeamEvaluator {
 public:
  using Subteam = std::uint32_t;

  TeamEvaluator(const Formula& f, const Team& base, EvalLimits limits = {})
      : program_(f, base.domain()), codes_(base.members()) {
    const std::size_t cap = std::min(limits.max_team_size, kHardMaxTeamSize);
    if (codes_.size() > cap)
      throw CapExceeded("team of size " + std::to_string(codes_.size()) + " exceeds the evaluation cap of " +
                        std::to_string(cap));
  }

  Subteam full() const noexcept {
    return codes_.size() == 32 ? ~Subteam{0} : (Subteam{1} << codes_.size()) - 1;
  }

  bool holds(Subteam y) { return eval(program_.root, y); }
  bool holds() { return holds(full()); }

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  bool eval(std::uint32_t node, Subteam y) {
    const auto& n = program_.nodes[node];
    switch (n.kind) {
      case Kind::top: return true;
      case Kind::bottom: return y == 0;
      case Kind::pos_lit:
      case Kind::neg_lit: {
        const bool want = n.kind == Kind::pos_lit;
        for (Subteam rest = y; rest; rest &= rest - 1)
          if (((codes_[std::countr_zero(rest)] & n.bit) != 0) != want) return false;
        return true;
      }
      case Kind::dep: return dep(n, y);
      case Kind::conj:
      case Kind::disj: break;
    }
    const std::uint64_t key = (std::uint64_t{node} << 32) | y;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = false;
    if (n.kind == Kind::conj) {
      result = eval(n.left, y) && eval(n.right, y);
    } else {
      for (Subteam part = y;; part = (part - 1) & y) {
        if (eval(n.left, part) && eval(n.right, y ^ part)) {
          result = true;
          break;
        }
        if (part == 0) break;
      }
    }
    memo_.emplace(key, result);
    return result;
  }

  bool dep(const detail::CompiledFormula::Node& n, Subteam y) const {
    for (Subteam a = y; a; a &= a - 1) {
      const ValuationCode u = codes_[std::countr_zero(a)];
      for (Subteam b = a & (a - 1); b; b &= b - 1) {
        const ValuationCode w = codes_[std::countr_zero(b)];
        if ((u & n.arg_bits) == (w & n.arg_bits) && (u & n.bit) != (w & n.bit)) return false;
      }
    }
    return true;
  }

  detail::CompiledFormula program_;
  std::vector<ValuationCode> codes_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

inline bool eval_team(const Team& t, const Formula& f, EvalLimits limits = {}) {
  return TeamEvaluator(f, t, limits).holds();
}

// Flatness-based evaluation for PL: t satisfies f iff every member satisfies f classically.
inline bool eval_team_flat(const Team& t, const Formula& f) {
  detail::require_pl(f, "flat evaluation");
  const detail::CompiledFormula program(f, t.domain());
  for (auto code : t.members())
    if (!program.classical(code)) return false;
  return true;
}

inline bool eval_team(const Team& t, const Formula& f, Logic logic, EvalLimits limits = {}) {
  return logic == Logic::tpl ? eval_team_flat(t, f) : eval_team(t, f, limits);
}

// Satisfaction of f on every team over d, indexed by characteristic mask.
inline std::vector<bool> satisfaction_table(const Formula& f, const Domain& d, Logic logic = Logic::pdl,
                                            std::size_t cap = kDefaultTeamEnumerationCap) {
  const TeamRange teams(d, cap);
  std::vector<bool> table(teams.size());
  if (logic == Logic::tpl) {
    detail::require_pl(f, "tpl");
    const detail::CompiledFormula program(f, d);
    TeamMask sat = 0;
    for (ValuationCode c = 0; c < d.valuation_count(); ++c)
      if (program.classical(c)) sat |= TeamMask{1} << c;
    for (TeamMask x = 0; x < table.size(); ++x) table[x] = (x & ~sat) == 0;
    return table;
  }
  // Members of the full team are the codes in ascending order, so subteam
  // masks of the full team coincide with characteristic masks.
  TeamEvaluator ev(f, full_team(d), {.max_team_size = kHardMaxTeamSize});
  for (TeamMask x = 0; x < table.size(); ++x) table[x] = ev.holds(static_cast<TeamEvaluator::Subteam>(x));
  return table;
}

struct SubteamCounterexample {
  Team team;
  Team subteam;
};

// Every (X, Y) with Y a subteam of X, X satisfying f and Y not.
inline std::vector<SubteamCounterexample> check_downward_closure(const Formula& f, const Domain& d,
                                                                 std::size_t cap = kDefaultTeamEnumerationCap) {
  const auto table = satisfaction_table(f, d, Logic::pdl, cap);
  std::vector<SubteamCounterexample> out;
  for (TeamMask x = 0; x < table.size(); ++x) {
    if (!table[x]) continue;
    for (TeamMask y = x;; y = (y - 1) & x) {
      if (!table[y]) out.push_back({team_from_mask(d, x), team_from_mask(d, y)});
      if (y == 0) break;
    }
  }
  return out;
}

// Every team X where satisfaction of f differs from satisfaction by all singletons of X.
inline std::vector<Team> check_flatness(const Formula& f, const Domain& d,
                                        std::size_t cap = kDefaultTeamEnumerationCap) {
  const auto table = satisfaction_table(f, d, Logic::pdl, cap);
  TeamMask singles = 0;
  for (ValuationCode c = 0; c < d.valuation_count(); ++c)
    if (table[TeamMask{1} << c]) singles |= TeamMask{1} << c;
  std::vector<Team> out;
  for (TeamMask x = 0; x < table.size(); ++x)
    if (table[x] != ((x & ~singles) == 0)) out.push_back(team_from_mask(d, x));
  return out;
}

namespace detail {

inline void require_logic(const Formula& f, Logic logic) {
  if (logic == Logic::tpl) require_pl(f, "tpl");
}

}  // namespace detail

// Team-semantic consequence over all teams of d: every team satisfying phi satisfies psi.
inline bool semantic_entails(const Formula& phi, const Formula& psi, const Domain& d, Logic logic,
                             std::size_t cap = kDefaultTeamEnumerationCap) {
  detail::require_logic(phi, logic);
  detail::require_logic(psi, logic);
  const auto a = satisfaction_table(phi, d, logic, cap);
  const auto b = satisfaction_table(psi, d, logic, cap);
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x] && !b[x]) return false;
  return true;
}

inline bool semantic_equiv(const Formula& phi, const Formula& psi, const Domain& d, Logic logic,
                           std::size_t cap = kDefaultTeamEnumerationCap) {
  detail::require_logic(phi, logic);
  detail::require_logic(psi, logic);
  return satisfaction_table(phi, d, logic, cap) == satisfaction_table(psi, d, logic, cap);
}

}  // namespace cumteam
