#pragma once

// Finite entailment relations over a formula universe and closure checks for
// the System C rules Ref, LLE, RW, CM, Cut.
//
// Underlying consequence and equivalence are team-semantic and decided by
// brute force over all teams of the relation's domain. CM and Cut need the
// conjunction of two universe members; a member serves as the conjunction if
// it is syntactically that conjunction or semantically equivalent to it.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cumteam/errors.hpp"
#include "cumteam/formula.hpp"
#include "cumteam/relmodel.hpp"
#include "cumteam/semantics.hpp"
#include "cumteam/teams.hpp"

namespace cumteam {

enum class Rule { ref, lle, rw, cm, cut };

inline constexpr Rule kSystemCRules[] = {Rule::ref, Rule::lle, Rule::rw, Rule::cm, Rule::cut};

inline std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::ref: return "Ref";
    case Rule::lle: return "LLE";
    case Rule::rw: return "RW";
    case Rule::cm: return "CM";
    case Rule::cut: return "Cut";
  }
  return "?";
}

using FormulaPair = std::pair<std::size_t, std::size_t>;

class EntailmentRelation {
 public:
  EntailmentRelation(Domain domain, std::vector<Formula> universe, std::set<FormulaPair> pairs,
                     Logic logic = Logic::pdl)
      : domain_(std::move(domain)), universe_(std::move(universe)), pairs_(std::move(pairs)), logic_(logic) {
    for (const auto& f : universe_) {
      for (const auto& v : vars_of(f)) domain_.require_index(v);
      if (logic_ == Logic::tpl && !is_pl(f)) throw DomainError("tpl universe contains " + render(f));
    }
    for (auto [i, j] : pairs_)
      if (i >= universe_.size() || j >= universe_.size()) throw ModelError("relation pair index out of range");
  }

  const Domain& domain() const noexcept { return domain_; }
  const std::vector<Formula>& universe() const noexcept { return universe_; }
  const std::set<FormulaPair>& pairs() const noexcept { return pairs_; }
  Logic logic() const noexcept { return logic_; }

  bool contains(std::size_t i, std::size_t j) const { return pairs_.count({i, j}) != 0; }

  void erase(std::size_t i, std::size_t j) { pairs_.erase({i, j}); }
  void insert(std::size_t i, std::size_t j) {
    if (i >= universe_.size() || j >= universe_.size()) throw ModelError("relation pair index out of range");
    pairs_.insert({i, j});
  }

 private:
  Domain domain_;
  std::vector<Formula> universe_;
  std::set<FormulaPair> pairs_;
  Logic logic_;
};

inline EntailmentRelation induced_relation(const RelationalModel& m, const std::vector<Formula>& universe,
                                           Logic logic = Logic::pdl) {
  std::set<FormulaPair> pairs;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const StateSet mins = minimal_states(m, states_of(m, universe[i], logic));
    for (std::size_t j = 0; j < universe.size(); ++j) {
      bool holds = true;
      for (auto s : mins)
        if (!label_satisfies(m, s, universe[j], logic)) {
          holds = false;
          break;
        }
      if (holds) pairs.insert({i, j});
    }
  }
  return EntailmentRelation(m.domain(), universe, std::move(pairs), logic);
}

namespace detail {

// Team-semantic facts about universe members, from their satisfaction tables.
class UniverseFacts {
 public:
  UniverseFacts(const Domain& d, const std::vector<Formula>& universe, Logic logic) : universe_(universe) {
    for (const auto& f : universe) tables_.push_back(satisfaction_table(f, d, logic));
  }

  bool entails(std::size_t i, std::size_t j) const {
    for (std::size_t x = 0; x < tables_[i].size(); ++x)
      if (tables_[i][x] && !tables_[j][x]) return false;
    return true;
  }

  bool equiv(std::size_t i, std::size_t j) const { return tables_[i] == tables_[j]; }

  // A universe member standing for And(universe[i], universe[j]).
  std::optional<std::size_t> conjunction(std::size_t i, std::size_t j) const {
    const Formula target = Formula::conj(universe_[i], universe_[j]);
    for (std::size_t k = 0; k < universe_.size(); ++k)
      if (universe_[k] == target) return k;
    std::vector<bool> both(tables_[i].size());
    for (std::size_t x = 0; x < both.size(); ++x) both[x] = tables_[i][x] && tables_[j][x];
    for (std::size_t k = 0; k < universe_.size(); ++k)
      if (tables_[k] == both) return k;
    return std::nullopt;
  }

 private:
  const std::vector<Formula>& universe_;
  std::vector<std::vector<bool>> tables_;
};

}  // namespace detail

struct RuleViolation {
  Rule rule;
  std::vector<FormulaPair> premises;  // |~ premises
  FormulaPair conclusion;             // the missing pair
  std::string detail;                 // side condition, if any
};

inline std::string describe(const EntailmentRelation& r, const RuleViolation& v) {
  auto pair_text = [&](FormulaPair p) {
    return render(r.universe()[p.first]) + " |~ " + render(r.universe()[p.second]);
  };
  std::string given;
  for (std::size_t i = 0; i < v.premises.size(); ++i) given += (i ? ", " : "") + pair_text(v.premises[i]);
  if (!v.detail.empty()) given += (given.empty() ? "" : ", ") + v.detail;
  const std::string head = std::string(to_string(v.rule)) + ": ";
  if (given.empty()) return head + "missing " + pair_text(v.conclusion);
  return head + given + " but not " + pair_text(v.conclusion);
}

namespace detail {

inline std::vector<RuleViolation> check_rule(const EntailmentRelation& r, Rule rule, const UniverseFacts& facts) {
  const std::size_t n = r.universe().size();
  const auto& u = r.universe();
  std::vector<RuleViolation> out;
  auto conj_of = [&](std::size_t i, std::size_t j) {
    auto k = facts.conjunction(i, j);
    if (!k)
      throw ModelError("universe is not closed under conjunction: no member for " + render(u[i]) + " & " +
                       render(u[j]));
    return *k;
  };
  switch (rule) {
    case Rule::ref:
      for (std::size_t i = 0; i < n; ++i)
        if (!r.contains(i, i)) out.push_back({rule, {}, {i, i}, ""});
      break;
    case Rule::lle:
      // phi == psi, phi |~ gamma  =>  psi |~ gamma
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j || !facts.equiv(i, j)) continue;
          for (std::size_t k = 0; k < n; ++k)
            if (r.contains(i, k) && !r.contains(j, k))
              out.push_back({rule, {{i, k}}, {j, k}, render(u[i]) + " == " + render(u[j])});
        }
      break;
    case Rule::rw:
      // phi |= psi, gamma |~ phi  =>  gamma |~ psi
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j || !facts.entails(i, j)) continue;
          for (std::size_t k = 0; k < n; ++k)
            if (r.contains(k, i) && !r.contains(k, j))
              out.push_back({rule, {{k, i}}, {k, j}, render(u[i]) + " |= " + render(u[j])});
        }
      break;
    case Rule::cm:
      // phi |~ psi, phi |~ gamma  =>  phi & psi |~ gamma
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const std::size_t c = conj_of(i, j);
          if (!r.contains(i, j)) continue;
          for (std::size_t k = 0; k < n; ++k)
            if (r.contains(i, k) && !r.contains(c, k)) out.push_back({rule, {{i, j}, {i, k}}, {c, k}, ""});
        }
      break;
    case Rule::cut:
      // phi & psi |~ gamma, phi |~ psi  =>  phi |~ gamma
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const std::size_t c = conj_of(i, j);
          if (!r.contains(i, j)) continue;
          for (std::size_t k = 0; k < n; ++k)
            if (r.contains(c, k) && !r.contains(i, k)) out.push_back({rule, {{c, k}, {i, j}}, {i, k}, ""});
        }
      break;
  }
  return out;
}

}  // namespace detail

inline std::vector<RuleViolation> check_rule(const EntailmentRelation& r, Rule rule) {
  const detail::UniverseFacts facts(r.domain(), r.universe(), r.logic());
  return detail::check_rule(r, rule, facts);
}

inline VerificationReport check_system_c(const EntailmentRelation& r) {
  const detail::UniverseFacts facts(r.domain(), r.universe(), r.logic());
  VerificationReport report{"System C"};
  for (Rule rule : kSystemCRules)
    for (const auto& v : detail::check_rule(r, rule, facts)) report.fail({describe(r, v), {}});
  return report;
}

// Extends base with conjunctions of members until every pairwise conjunction has a
// syntactic or equivalent representative, or max_rounds rounds have run.
inline std::vector<Formula> conjunction_closure(const Domain& d, std::vector<Formula> base, Logic logic,
                                                std::size_t max_rounds = 4) {
  for (std::size_t round = 0; round < max_rounds; ++round) {
    std::vector<std::vector<bool>> tables;
    for (const auto& f : base) tables.push_back(satisfaction_table(f, d, logic));
    const std::size_t n = base.size();
    bool added = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Formula target = Formula::conj(base[i], base[j]);
        std::vector<bool> both(tables[i].size());
        for (std::size_t x = 0; x < both.size(); ++x) both[x] = tables[i][x] && tables[j][x];
        bool found = false;
        for (std::size_t k = 0; k < base.size() && !found; ++k) found = base[k] == target || tables[k] == both;
        if (!found) {
          base.push_back(target);
          tables.push_back(std::move(both));
          added = true;
        }
      }
    if (!added) break;
  }
  return base;
}

}  // namespace cumteam
