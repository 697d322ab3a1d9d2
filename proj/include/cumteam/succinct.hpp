#pragma once

// Circuit-encoded cumulative models over states {0,1}^m.
//
// Label circuit: m + 2^n inputs laid out as [state bits][team characteristic bits in
// canonical valuation order], two outputs (defined flag, membership). The label of a
// defined state s is the set of teams b with membership(s, b) = 1.
//
// Order circuit: 2m inputs laid out as [bits of s'][bits of s], one output, 1 iff s' < s
// (s' is preferred). It is consulted only on pairs of defined states.
//
// State bit k is input k; a state code reads its bits with input 0 most significant.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cumteam/circuit.hpp"
#include "cumteam/errors.hpp"
#include "cumteam/formula.hpp"
#include "cumteam/relmodel.hpp"
#include "cumteam/semantics.hpp"
#include "cumteam/teams.hpp"

namespace cumteam {

struct SuccinctLimits {
  std::size_t max_state_bits = 12;
  std::size_t max_vars = 3;
};

using StateCode = std::uint32_t;

class SuccinctModel {
 public:
  SuccinctModel(Domain domain, std::size_t state_bits, Circuit label, Circuit order)
      : domain_(std::move(domain)), state_bits_(state_bits), label_(std::move(label)), order_(std::move(order)) {
    if (state_bits_ == 0 || state_bits_ > 24) throw CircuitError("state bit count must be in 1..24");
    require_mask_domain(domain_);
    const std::size_t label_inputs = state_bits_ + domain_.valuation_count();
    if (label_.input_count() != label_inputs)
      throw CircuitError("label circuit must have m + 2^n = " + std::to_string(label_inputs) + " inputs, has " +
                         std::to_string(label_.input_count()));
    if (label_.outputs().size() != 2)
      throw CircuitError("label circuit must have 2 outputs (defined, member), has " +
                         std::to_string(label_.outputs().size()));
    if (order_.input_count() != 2 * state_bits_)
      throw CircuitError("order circuit must have 2m = " + std::to_string(2 * state_bits_) + " inputs, has " +
                         std::to_string(order_.input_count()));
    if (order_.outputs().size() != 1)
      throw CircuitError("order circuit must have 1 output, has " + std::to_string(order_.outputs().size()));
  }

  const Domain& domain() const noexcept { return domain_; }
  std::size_t state_bits() const noexcept { return state_bits_; }
  const Circuit& label_circuit() const noexcept { return label_; }
  const Circuit& order_circuit() const noexcept { return order_; }
  StateCode state_count() const noexcept { return StateCode{1} << state_bits_; }

  std::string state_id(StateCode s) const { return code_bits(s, state_bits_); }

  StateCode parse_state(const std::string& bits) const {
    if (bits.size() != state_bits_) throw CircuitError("state '" + bits + "' must have " +
                                                       std::to_string(state_bits_) + " bits");
    StateCode s = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') throw CircuitError("state '" + bits + "' is not a bitstring");
      s = (s << 1) | static_cast<StateCode>(c == '1');
    }
    return s;
  }

 private:
  Domain domain_;
  std::size_t state_bits_;
  Circuit label_;
  Circuit order_;
};

namespace detail {

inline void require_succinct_caps(const SuccinctModel& sm, const SuccinctLimits& limits) {
  if (sm.state_bits() > limits.max_state_bits)
    throw CapExceeded("succinct model has " + std::to_string(sm.state_bits()) + " state bits; cap is " +
                      std::to_string(limits.max_state_bits));
  if (sm.domain().size() > limits.max_vars)
    throw CapExceeded("succinct model has " + std::to_string(sm.domain().size()) + " variables; cap is " +
                      std::to_string(limits.max_vars));
}

inline std::uint64_t broadcast(bool b) { return b ? ~std::uint64_t{0} : 0; }

// Label circuit outputs for state s and the 64 teams with masks base .. base+63.
struct LabelLanes {
  std::uint64_t defined;
  std::uint64_t member;
};

inline LabelLanes label_lanes(const SuccinctModel& sm, StateCode s, TeamMask base) {
  const std::size_t m = sm.state_bits();
  const std::size_t k = sm.domain().valuation_count();
  std::vector<std::uint64_t> in(m + k);
  for (std::size_t i = 0; i < m; ++i) in[i] = broadcast((s >> (m - 1 - i)) & 1);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t lane = 0;
    for (std::size_t l = 0; l < 64; ++l)
      if (((base + l) >> i) & 1) lane |= std::uint64_t{1} << l;
    in[m + i] = lane;
  }
  auto out = eval_circuit_lanes(sm.label_circuit(), in);
  return {out[0], out[1]};
}

// Number of valid lanes in the batch starting at base.
inline std::size_t lanes_in_batch(TeamMask total, TeamMask base) {
  return static_cast<std::size_t>(std::min<TeamMask>(64, total - base));
}

inline std::uint64_t lane_mask(std::size_t count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

inline bool state_defined(const SuccinctModel& sm, StateCode s) {
  return (label_lanes(sm, s, 0).defined & 1) != 0;
}

// Order circuit on pairs (candidates[base + l], s) for 64 lanes.
inline std::uint64_t order_lanes(const SuccinctModel& sm, const std::vector<StateCode>& lower, std::size_t base,
                                 StateCode higher) {
  const std::size_t m = sm.state_bits();
  std::vector<std::uint64_t> in(2 * m, 0);
  const std::size_t count = std::min<std::size_t>(64, lower.size() - base);
  for (std::size_t l = 0; l < count; ++l)
    for (std::size_t i = 0; i < m; ++i)
      if ((lower[base + l] >> (m - 1 - i)) & 1) in[i] |= std::uint64_t{1} << l;
  for (std::size_t i = 0; i < m; ++i) in[m + i] = broadcast((higher >> (m - 1 - i)) & 1);
  return eval_circuit_lanes(sm.order_circuit(), in)[0] & lane_mask(count);
}

inline bool order_holds(const SuccinctModel& sm, StateCode lower, StateCode higher) {
  return (order_lanes(sm, {lower}, 0, higher) & 1) != 0;
}

}  // namespace detail

// (a) the defined flag of each state is constant across team inputs;
// (b) lint: order pairs involving undefined states that evaluate to 1 are noted.
inline VerificationReport validate_succinct(const SuccinctModel& sm, SuccinctLimits limits = {},
                                            std::size_t max_notes = 16) {
  detail::require_succinct_caps(sm, limits);
  VerificationReport r{"succinct model"};
  const TeamMask teams = team_count(sm.domain());
  std::vector<char> defined(sm.state_count(), 0);
  for (StateCode s = 0; s < sm.state_count(); ++s) {
    std::optional<std::pair<bool, TeamMask>> first;
    std::optional<TeamMask> differing;
    for (TeamMask base = 0; base < teams && !differing; base += 64) {
      const std::size_t count = detail::lanes_in_batch(teams, base);
      const auto lanes = detail::label_lanes(sm, s, base);
      for (std::size_t l = 0; l < count; ++l) {
        const bool d = (lanes.defined >> l) & 1;
        if (!first) first.emplace(d, base + l);
        else if (d != first->first) {
          differing = base + l;
          break;
        }
      }
    }
    defined[s] = first->first;
    if (differing)
      r.fail({"defined flag of state " + sm.state_id(s) + " depends on team inputs",
              {"{" + team_from_mask(sm.domain(), first->second).to_literal() + "}",
               "{" + team_from_mask(sm.domain(), *differing).to_literal() + "}"}});
  }
  std::size_t lint = 0;
  std::vector<StateCode> all(sm.state_count());
  for (StateCode s = 0; s < all.size(); ++s) all[s] = s;
  for (StateCode hi = 0; hi < sm.state_count(); ++hi)
    for (std::size_t base = 0; base < all.size(); base += 64) {
      std::uint64_t hits = detail::order_lanes(sm, all, base, hi);
      for (; hits; hits &= hits - 1) {
        const StateCode lo = static_cast<StateCode>(base + std::countr_zero(hits));
        if (defined[lo] && defined[hi]) continue;
        if (++lint <= max_notes)
          r.notes.push_back("order circuit relates undefined state pair " + sm.state_id(lo) + " < " +
                            sm.state_id(hi));
      }
    }
  if (lint > max_notes) r.notes.push_back(std::to_string(lint - max_notes) + " further undefined-pair notes");
  return r;
}

// Teams labelling s, or nothing when s is undefined.
inline std::optional<std::vector<Team>> succ_label(const SuccinctModel& sm, StateCode s, SuccinctLimits limits = {}) {
  detail::require_succinct_caps(sm, limits);
  if (s >= sm.state_count()) throw CircuitError("state code out of range");
  const TeamMask teams = team_count(sm.domain());
  std::vector<Team> out;
  for (TeamMask base = 0; base < teams; base += 64) {
    const auto lanes = detail::label_lanes(sm, s, base);
    if (base == 0 && !(lanes.defined & 1)) return std::nullopt;
    std::uint64_t member = lanes.member & detail::lane_mask(detail::lanes_in_batch(teams, base));
    for (; member; member &= member - 1) out.push_back(team_from_mask(sm.domain(), base + std::countr_zero(member)));
  }
  return out;
}

struct SuccinctAnswer {
  bool holds = true;
  std::optional<StateCode> violating_state;
};

// For every defined state s whose label satisfies phi and fails psi, look for a
// defined phi-state s' with s' < s; if none exists, s is a violating minimal state.
inline SuccinctAnswer check_succ_entailment(const SuccinctModel& sm, const Formula& phi, const Formula& psi,
                                            Logic logic = Logic::pdl, SuccinctLimits limits = {}) {
  detail::require_succinct_caps(sm, limits);
  const Domain& d = sm.domain();
  const auto phi_table = satisfaction_table(phi, d, logic, limits.max_vars);
  const auto psi_table = satisfaction_table(psi, d, logic, limits.max_vars);
  const TeamMask teams = team_count(d);

  std::vector<StateCode> phi_states;
  std::vector<StateCode> phi_not_psi;
  for (StateCode s = 0; s < sm.state_count(); ++s) {
    bool defined = true, sat_phi = true, sat_psi = true;
    for (TeamMask base = 0; base < teams && defined; base += 64) {
      const auto lanes = detail::label_lanes(sm, s, base);
      if (base == 0 && !(lanes.defined & 1)) defined = false;
      std::uint64_t member = lanes.member & detail::lane_mask(detail::lanes_in_batch(teams, base));
      for (; member; member &= member - 1) {
        const TeamMask t = base + std::countr_zero(member);
        sat_phi = sat_phi && phi_table[t];
        sat_psi = sat_psi && psi_table[t];
      }
    }
    if (!defined || !sat_phi) continue;
    phi_states.push_back(s);
    if (!sat_psi) phi_not_psi.push_back(s);
  }

  for (StateCode s : phi_not_psi) {
    bool dominated = false;
    for (std::size_t base = 0; base < phi_states.size() && !dominated; base += 64)
      dominated = detail::order_lanes(sm, phi_states, base, s) != 0;
    if (!dominated) return {false, s};
  }
  return {};
}

inline bool succ_entails(const SuccinctModel& sm, const Formula& phi, const Formula& psi, Logic logic = Logic::pdl,
                         SuccinctLimits limits = {}) {
  return check_succ_entailment(sm, phi, psi, logic, limits).holds;
}

// Explicit model over the defined states (ids are state bitstrings).
inline RelationalModel expand(const SuccinctModel& sm, SuccinctLimits limits = {}) {
  detail::require_succinct_caps(sm, limits);
  std::vector<RelationalModel::State> states;
  std::vector<StateCode> codes;
  for (StateCode s = 0; s < sm.state_count(); ++s) {
    auto label = succ_label(sm, s, limits);
    if (!label) continue;
    states.push_back({sm.state_id(s), std::move(*label)});
    codes.push_back(s);
  }
  std::vector<std::pair<StateIndex, StateIndex>> rel;
  for (StateIndex hi = 0; hi < codes.size(); ++hi)
    for (std::size_t base = 0; base < codes.size(); base += 64)
      for (std::uint64_t hits = detail::order_lanes(sm, codes, base, codes[hi]); hits; hits &= hits - 1)
        rel.emplace_back(base + std::countr_zero(hits), hi);
  return RelationalModel(sm.domain(), std::move(states), std::move(rel));
}

}  // namespace cumteam
