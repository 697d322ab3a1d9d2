#pragma once

// Reference implementations transcribed directly from the definitions, for
// cross-validating the optimized engines. They share no code with semantics.hpp
// or the entailment procedure in relmodel.hpp.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cumteam/errors.hpp"
#include "cumteam/formula.hpp"
#include "cumteam/relmodel.hpp"
#include "cumteam/teams.hpp"

namespace cumteam::oracle {

inline constexpr std::size_t kMaxTeamSize = 8;
inline constexpr std::size_t kMaxStates = 64;

namespace detail {

// Satisfaction on subteams of a fixed team, subteams given as bitmasks over its members.
// Disjunction tries every cover X = Y u Z (each member in Y only, Z only, or both);
// results are cached per (subformula, subteam) so nested disjunctions stay tractable.
class CoverOracle {
 public:
  CoverOracle(const Team& t, const Formula& f) : team_(t.valuations()) {
    add(f);
    memo_.assign(nodes_.size(), std::vector<signed char>(std::size_t{1} << team_.size(), -1));
  }

  bool holds_on_team() { return holds(nodes_.size() - 1, (std::uint32_t{1} << team_.size()) - 1); }

 private:
  struct Node {
    Formula f;
    std::size_t left = 0, right = 0;
  };

  std::size_t add(const Formula& f) {
    Node n{f};
    if (f.is_binary()) {
      n.left = add(f.left());
      n.right = add(f.right());
    }
    nodes_.push_back(std::move(n));
    return nodes_.size() - 1;
  }

  bool holds(std::size_t i, std::uint32_t x) {
    auto& slot = memo_[i][x];
    if (slot < 0) slot = compute(i, x) ? 1 : 0;
    return slot == 1;
  }

  bool compute(std::size_t i, std::uint32_t x) {
    const Node& n = nodes_[i];
    const Formula& f = n.f;
    std::vector<const Valuation*> team;
    for (std::size_t k = 0; k < team_.size(); ++k)
      if ((x >> k) & 1) team.push_back(&team_[k]);
    switch (f.kind()) {
      case Kind::top: return true;
      case Kind::bottom: return team.empty();
      case Kind::pos_lit:
        for (auto v : team)
          if (!v->value(f.var())) return false;
        return true;
      case Kind::neg_lit:
        for (auto v : team)
          if (v->value(f.var())) return false;
        return true;
      case Kind::dep: {
        const auto args = f.dep_args();
        for (auto v : team)
          for (auto w : team) {
            bool agree = true;
            for (const auto& a : args) agree = agree && v->value(a) == w->value(a);
            if (agree && v->value(f.dep_target()) != w->value(f.dep_target())) return false;
          }
        return true;
      }
      case Kind::conj: return holds(n.left, x) && holds(n.right, x);
      case Kind::disj:
        for (std::uint32_t y = x;; y = (y - 1) & x) {
          const std::uint32_t only_z = x & ~y;
          for (std::uint32_t both = y;; both = (both - 1) & y) {
            if (holds(n.left, y) && holds(n.right, only_z | both)) return true;
            if (both == 0) break;
          }
          if (y == 0) break;
        }
        return false;
    }
    return false;
  }

  std::vector<Valuation> team_;
  std::vector<Node> nodes_;
  std::vector<std::vector<signed char>> memo_;
};

inline void require_vars(const Domain& d, const Formula& f) {
  for (const auto& v : vars_of(f))
    if (!d.index_of(v)) throw DomainError("variable '" + v.name() + "' is not in the domain");
}

}  // namespace detail

inline bool oracle_eval_team(const Team& t, const Formula& f) {
  if (t.size() > kMaxTeamSize)
    throw CapExceeded("oracle evaluation supports teams of at most " + std::to_string(kMaxTeamSize) + " members");
  detail::require_vars(t.domain(), f);
  return detail::CoverOracle(t, f).holds_on_team();
}

// phi |~ psi iff min([[phi]], R) is a subset of [[psi]], computed literally.
inline bool oracle_entails(const RelationalModel& m, const Formula& phi, const Formula& psi) {
  if (m.state_count() > kMaxStates)
    throw CapExceeded("oracle entailment supports at most " + std::to_string(kMaxStates) + " states");
  detail::require_vars(m.domain(), phi);
  detail::require_vars(m.domain(), psi);

  auto label_models = [&](StateIndex s, const Formula& f) {
    for (const auto& t : m.label(s))
      if (!oracle_eval_team(t, f)) return false;
    return true;
  };

  std::vector<StateIndex> phi_states;
  for (StateIndex s = 0; s < m.state_count(); ++s)
    if (label_models(s, phi)) phi_states.push_back(s);

  std::set<Team> minimal_models;
  for (StateIndex s : phi_states) {
    bool minimal = true;
    for (StateIndex other : phi_states)
      if (m.related(other, s)) minimal = false;
    if (minimal) minimal_models.insert(m.label(s).begin(), m.label(s).end());
  }

  for (const auto& t : minimal_models)
    if (!oracle_eval_team(t, psi)) return false;
  return true;
}

}  // namespace cumteam::oracle
