#pragma once

// Explicit relational models <S, l, R> whose states are labelled with sets of
// teams, entailment via minimal states, and smoothness / cumulativity checks.
//
// A preferential model is the special case where every label holds one team.
// States with an empty label satisfy every formula vacuously; if R-minimal they
// are minimal for every formula.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cumteam/errors.hpp"
#include "cumteam/formula.hpp"
#include "cumteam/semantics.hpp"
#include "cumteam/teams.hpp"

namespace cumteam {

using StateIndex = std::size_t;
// Sorted, duplicate-free state indices.
using StateSet = std::vector<StateIndex>;

inline constexpr std::size_t kAllSubsetsStateCap = 16;

class RelationalModel {
 public:
  struct State {
    std::string id;
    std::vector<Team> label;
  };

  // Each pair (lower, higher) means lower R higher: lower is preferred.
  RelationalModel(Domain domain, std::vector<State> states, std::vector<std::pair<StateIndex, StateIndex>> rel)
      : domain_(std::move(domain)), states_(std::move(states)) {
    for (StateIndex i = 0; i < states_.size(); ++i) {
      auto& s = states_[i];
      if (s.id.empty()) throw ModelError("state identifiers must be non-empty");
      if (!index_.emplace(s.id, i).second) throw ModelError("duplicate state '" + s.id + "'");
      for (const auto& t : s.label)
        if (!(t.domain() == domain_)) throw ModelError("state '" + s.id + "' has a team over a different domain");
      std::sort(s.label.begin(), s.label.end());
      s.label.erase(std::unique(s.label.begin(), s.label.end()), s.label.end());
    }
    std::sort(rel.begin(), rel.end());
    rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
    preds_.resize(states_.size());
    for (auto [lo, hi] : rel) {
      if (lo >= states_.size() || hi >= states_.size()) throw ModelError("relation refers to an unknown state");
      preds_[hi].push_back(lo);
    }
    rel_ = std::move(rel);
  }

  // Relation given by state identifiers.
  static RelationalModel with_ids(Domain domain, std::vector<State> states,
                                  const std::vector<std::pair<std::string, std::string>>& rel) {
    std::map<std::string, StateIndex> index;
    for (StateIndex i = 0; i < states.size(); ++i) index.emplace(states[i].id, i);
    auto lookup = [&](const std::string& id) {
      auto it = index.find(id);
      if (it == index.end()) throw ModelError("relation refers to unknown state '" + id + "'");
      return it->second;
    };
    std::vector<std::pair<StateIndex, StateIndex>> pairs;
    for (const auto& [lo, hi] : rel) pairs.emplace_back(lookup(lo), lookup(hi));
    return RelationalModel(std::move(domain), std::move(states), std::move(pairs));
  }

  const Domain& domain() const noexcept { return domain_; }
  std::size_t state_count() const noexcept { return states_.size(); }
  const State& state(StateIndex s) const { return states_.at(s); }
  const std::string& id(StateIndex s) const { return states_.at(s).id; }
  const std::vector<Team>& label(StateIndex s) const { return states_.at(s).label; }
  const std::vector<std::pair<StateIndex, StateIndex>>& rel() const noexcept { return rel_; }
  // States s' with s' R s.
  const std::vector<StateIndex>& preds(StateIndex s) const { return preds_.at(s); }

  bool related(StateIndex lower, StateIndex higher) const {
    return std::binary_search(rel_.begin(), rel_.end(), std::make_pair(lower, higher));
  }

  StateIndex index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ModelError("unknown state '" + id + "'");
    return it->second;
  }

  StateSet all_states() const {
    StateSet out(states_.size());
    for (StateIndex i = 0; i < out.size(); ++i) out[i] = i;
    return out;
  }

 private:
  Domain domain_;
  std::vector<State> states_;
  std::vector<std::pair<StateIndex, StateIndex>> rel_;
  std::vector<std::vector<StateIndex>> preds_;
  std::map<std::string, StateIndex> index_;
};

namespace detail {

inline void require_state(const RelationalModel& m, StateIndex s) {
  if (s >= m.state_count()) throw ModelError("unknown state index " + std::to_string(s));
}

inline void require_subset(const RelationalModel& m, const StateSet& subset) {
  for (auto s : subset) require_state(m, s);
}

inline void require_model_vars(const RelationalModel& m, const Formula& f) {
  for (const auto& v : vars_of(f)) m.domain().require_index(v);
}

}  // namespace detail

// Every team in the label of s satisfies f. Under Logic::tpl the check uses the flat engine.
inline bool label_satisfies(const RelationalModel& m, StateIndex s, const Formula& f, Logic logic = Logic::pdl) {
  detail::require_state(m, s);
  detail::require_model_vars(m, f);
  for (const auto& t : m.label(s))
    if (!eval_team(t, f, logic)) return false;
  return true;
}

inline StateSet states_of(const RelationalModel& m, const Formula& f, Logic logic = Logic::pdl) {
  detail::require_model_vars(m, f);
  StateSet out;
  for (StateIndex s = 0; s < m.state_count(); ++s)
    if (label_satisfies(m, s, f, logic)) out.push_back(s);
  return out;
}

// Sinks of R restricted to subset: members with no R-predecessor inside subset.
inline StateSet minimal_states(const RelationalModel& m, const StateSet& subset) {
  detail::require_subset(m, subset);
  std::vector<char> in(m.state_count(), 0), dominated(m.state_count(), 0);
  for (auto s : subset) in[s] = 1;
  for (auto [lo, hi] : m.rel())
    if (in[lo] && in[hi]) dominated[hi] = 1;
  StateSet out;
  for (auto s : subset)
    if (!dominated[s]) out.push_back(s);
  return out;
}

// Union of the labels of the minimal states satisfying f.
inline std::vector<Team> min_models(const RelationalModel& m, const Formula& f, Logic logic = Logic::pdl) {
  std::vector<Team> out;
  for (auto s : minimal_states(m, states_of(m, f, logic)))
    out.insert(out.end(), m.label(s).begin(), m.label(s).end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct EntailmentAnswer {
  bool holds = true;
  std::optional<StateIndex> violating_state;  // a minimal phi-state whose label fails psi
};

inline EntailmentAnswer check_entailment(const RelationalModel& m, const Formula& phi, const Formula& psi,
                                         Logic logic = Logic::pdl) {
  detail::require_model_vars(m, phi);
  detail::require_model_vars(m, psi);
  for (auto s : minimal_states(m, states_of(m, phi, logic)))
    if (!label_satisfies(m, s, psi, logic)) return {false, s};
  return {};
}

// phi |~ psi: every minimal phi-state has a label satisfying psi.
inline bool entails(const RelationalModel& m, const Formula& phi, const Formula& psi, Logic logic = Logic::pdl) {
  return check_entailment(m, phi, psi, logic).holds;
}

struct SmoothnessResult {
  bool smooth = true;
  StateSet violators;
};

// Smooth: every member is minimal or lies R-above some minimal member.
inline SmoothnessResult is_smooth(const RelationalModel& m, const StateSet& subset) {
  const StateSet mins = minimal_states(m, subset);
  std::vector<char> is_min(m.state_count(), 0);
  for (auto s : mins) is_min[s] = 1;
  SmoothnessResult r;
  for (auto s : subset) {
    if (is_min[s]) continue;
    const auto& p = m.preds(s);
    if (std::none_of(p.begin(), p.end(), [&](StateIndex q) { return is_min[q] != 0; })) r.violators.push_back(s);
  }
  r.smooth = r.violators.empty();
  return r;
}

struct Witness {
  std::string subject;              // formula text or state subset
  std::vector<std::string> states;  // offending states
};

struct VerificationReport {
  VerificationReport() = default;
  explicit VerificationReport(std::string name) : property(std::move(name)) {}

  std::string property;
  bool passed = true;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;

  void fail(Witness w) {
    passed = false;
    witnesses.push_back(std::move(w));
  }
};

inline std::ostream& operator<<(std::ostream& os, const VerificationReport& r) {
  os << r.property << ": " << (r.passed ? "pass" : "fail") << '\n';
  for (const auto& w : r.witnesses) {
    os << "  witness " << w.subject << ":";
    for (const auto& s : w.states) os << ' ' << s;
    os << '\n';
  }
  for (const auto& n : r.notes) os << "  note: " << n << '\n';
  return os;
}

namespace detail {

inline std::vector<std::string> state_ids(const RelationalModel& m, const StateSet& s) {
  std::vector<std::string> out;
  for (auto i : s) out.push_back(m.id(i));
  return out;
}

inline std::string subset_text(const RelationalModel& m, const StateSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + m.id(s[i]);
  return out + "}";
}

inline void note_empty_labels(const RelationalModel& m, VerificationReport& r) {
  for (StateIndex s = 0; s < m.state_count(); ++s)
    if (m.label(s).empty()) r.notes.push_back("state " + m.id(s) + " has an empty label");
}

}  // namespace detail

// Smoothness of S(phi) for each phi in the universe.
inline VerificationReport verify_cumulative(const RelationalModel& m, const std::vector<Formula>& universe,
                                            Logic logic = Logic::pdl) {
  VerificationReport r{"cumulative (universe)"};
  for (const auto& phi : universe) {
    auto s = is_smooth(m, states_of(m, phi, logic));
    if (!s.smooth) r.fail({render(phi), detail::state_ids(m, s.violators)});
  }
  detail::note_empty_labels(m, r);
  return r;
}

// Smoothness of every subset of states; sufficient for cumulativity over any language.
inline VerificationReport verify_cumulative_all_subsets(const RelationalModel& m,
                                                        std::size_t max_witnesses = 32) {
  if (m.state_count() > kAllSubsetsStateCap)
    throw CapExceeded("all-subsets cumulativity check supports at most " + std::to_string(kAllSubsetsStateCap) +
                      " states, model has " + std::to_string(m.state_count()));
  VerificationReport r{"cumulative (all subsets)"};
  std::size_t failures = 0;
  const std::uint32_t limit = std::uint32_t{1} << m.state_count();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    StateSet subset;
    for (StateIndex i = 0; i < m.state_count(); ++i)
      if (mask & (std::uint32_t{1} << i)) subset.push_back(i);
    auto s = is_smooth(m, subset);
    if (s.smooth) continue;
    if (++failures <= max_witnesses) {
      r.fail({detail::subset_text(m, subset), detail::state_ids(m, s.violators)});
    }
  }
  if (failures > max_witnesses)
    r.notes.push_back(std::to_string(failures - max_witnesses) + " further non-smooth subsets not listed");
  detail::note_empty_labels(m, r);
  return r;
}

// Asymmetric R and a unique minimal state for every universe formula with non-empty S(phi).
// Formulas with empty S(phi) are listed as notes, not failures.
inline VerificationReport verify_strong_cumulative(const RelationalModel& m, const std::vector<Formula>& universe,
                                                   Logic logic = Logic::pdl) {
  VerificationReport r{"strong cumulative"};
  for (auto [lo, hi] : m.rel())
    if (lo <= hi && m.related(hi, lo)) r.fail({"asymmetry", {m.id(lo), m.id(hi)}});
  for (const auto& phi : universe) {
    const auto sat = states_of(m, phi, logic);
    if (sat.empty()) {
      r.notes.push_back("no state satisfies " + render(phi));
      continue;
    }
    const auto mins = minimal_states(m, sat);
    if (mins.size() != 1) r.fail({"unique minimum for " + render(phi), detail::state_ids(m, mins)});
  }
  detail::note_empty_labels(m, r);
  return r;
}

}  // namespace cumteam
