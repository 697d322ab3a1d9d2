#pragma once

// Finite variable domains, valuations, and teams (sets of valuations).
//
// A valuation over a domain of n variables is identified with its code: the
// n-bit number whose most significant bit is the first domain variable. The
// canonical valuation order is ascending code. A team over a domain with
// n <= 6 is identified with its characteristic mask: bit i is set iff the
// valuation with code i is a member. The canonical team order is ascending mask.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cumteam/errors.hpp"
#include "cumteam/formula.hpp"

namespace cumteam {

inline constexpr std::size_t kMaxDomainSize = 24;
inline constexpr std::size_t kDefaultTeamEnumerationCap = 4;
// Characteristic masks are 64 bits wide.
inline constexpr std::size_t kMaxMaskDomainSize = 6;

using ValuationCode = std::uint32_t;
using TeamMask = std::uint64_t;

class Domain {
 public:
  explicit Domain(std::vector<Variable> vars)
      : vars_(std::make_shared<const std::vector<Variable>>(std::move(vars))) {
    if (vars_->empty()) throw DomainError("domain must be non-empty");
    if (vars_->size() > kMaxDomainSize)
      throw CapExceeded("domain has " + std::to_string(vars_->size()) + " variables; at most " +
                        std::to_string(kMaxDomainSize) + " supported");
    std::set<Variable> seen;
    for (const auto& v : *vars_)
      if (!seen.insert(v).second) throw DomainError("duplicate variable '" + v.name() + "' in domain");
  }

  // "p,q,r"
  static Domain parse(std::string_view csv) {
    std::vector<Variable> vars;
    std::size_t start = 0;
    while (start <= csv.size()) {
      std::size_t end = csv.find(',', start);
      if (end == std::string_view::npos) end = csv.size();
      std::string_view item = csv.substr(start, end - start);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      if (!is_variable_name(item)) throw DomainError("invalid variable name '" + std::string(item) + "'");
      vars.emplace_back(std::string(item));
      start = end + 1;
    }
    return Domain(std::move(vars));
  }

  std::size_t size() const noexcept { return vars_->size(); }
  const Variable& operator[](std::size_t i) const { return (*vars_)[i]; }
  const std::vector<Variable>& vars() const noexcept { return *vars_; }
  auto begin() const noexcept { return vars_->begin(); }
  auto end() const noexcept { return vars_->end(); }

  std::size_t valuation_count() const noexcept { return std::size_t{1} << size(); }

  std::optional<std::size_t> index_of(const Variable& v) const {
    auto it = std::find(vars_->begin(), vars_->end(), v);
    if (it == vars_->end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_->begin());
  }

  std::size_t require_index(const Variable& v) const {
    auto i = index_of(v);
    if (!i) throw DomainError("variable '" + v.name() + "' is not in the domain");
    return *i;
  }

  // Bit of the valuation code that holds variable i.
  ValuationCode bit_of(std::size_t i) const noexcept {
    return ValuationCode{1} << (size() - 1 - i);
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ',';
      out += (*vars_)[i].name();
    }
    return out;
  }

  friend bool operator==(const Domain& a, const Domain& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const std::vector<Variable>> vars_;
};

class Valuation {
 public:
  Valuation(Domain domain, ValuationCode code) : domain_(std::move(domain)), code_(code) {
    if (code_ >= domain_.valuation_count())
      throw DomainError("valuation code " + std::to_string(code_) + " out of range for domain");
  }

  // "100" assigns 1 to the first domain variable and 0 to the others.
  static Valuation parse(const Domain& d, std::string_view bits) {
    if (bits.size() != d.size())
      throw DomainError("valuation '" + std::string(bits) + "' has " + std::to_string(bits.size()) +
                        " bits, domain has " + std::to_string(d.size()) + " variables");
    ValuationCode code = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') throw DomainError("valuation '" + std::string(bits) + "' is not a bitstring");
      code = (code << 1) | static_cast<ValuationCode>(c == '1');
    }
    return Valuation(d, code);
  }

  const Domain& domain() const noexcept { return domain_; }
  ValuationCode code() const noexcept { return code_; }

  bool operator[](std::size_t i) const noexcept { return (code_ & domain_.bit_of(i)) != 0; }
  bool value(const Variable& v) const { return (*this)[domain_.require_index(v)]; }

  std::string bits() const {
    std::string out(domain_.size(), '0');
    for (std::size_t i = 0; i < domain_.size(); ++i)
      if ((*this)[i]) out[i] = '1';
    return out;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.code_ == b.code_ && a.domain_ == b.domain_;
  }

 private:
  Domain domain_;
  ValuationCode code_;
};

inline std::string code_bits(ValuationCode code, std::size_t n) {
  std::string out(n, '0');
  for (std::size_t i = 0; i < n; ++i)
    if (code & (ValuationCode{1} << (n - 1 - i))) out[i] = '1';
  return out;
}

class Team {
 public:
  explicit Team(Domain domain) : domain_(std::move(domain)) {}

  // Duplicate codes collapse.
  Team(Domain domain, std::vector<ValuationCode> codes) : domain_(std::move(domain)), members_(std::move(codes)) {
    for (auto c : members_)
      if (c >= domain_.valuation_count())
        throw DomainError("valuation code " + std::to_string(c) + " out of range for domain");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  Team(Domain domain, const std::vector<Valuation>& valuations) : domain_(std::move(domain)) {
    for (const auto& v : valuations) {
      if (!(v.domain() == domain_)) throw DomainError("valuation over a different domain");
      members_.push_back(v.code());
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  // Team literal: semicolon-separated bitstrings in domain order, "100;010".
  // The empty string is the empty team.
  static Team parse(const Domain& d, std::string_view literal) {
    std::vector<ValuationCode> codes;
    std::size_t start = 0;
    while (start < literal.size()) {
      std::size_t end = literal.find(';', start);
      if (end == std::string_view::npos) end = literal.size();
      std::string_view item = literal.substr(start, end - start);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      codes.push_back(Valuation::parse(d, item).code());
      start = end + 1;
      if (end + 1 == literal.size()) throw DomainError("team literal ends with ';'");
    }
    return Team(d, std::move(codes));
  }

  const Domain& domain() const noexcept { return domain_; }
  const std::vector<ValuationCode>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  bool contains(ValuationCode c) const { return std::binary_search(members_.begin(), members_.end(), c); }

  std::vector<Valuation> valuations() const {
    std::vector<Valuation> out;
    out.reserve(members_.size());
    for (auto c : members_) out.emplace_back(domain_, c);
    return out;
  }

  bool is_subteam_of(const Team& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
  }

  std::string to_literal() const {
    std::string out;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) out += ';';
      out += code_bits(members_[i], domain_.size());
    }
    return out;
  }

  friend bool operator==(const Team& a, const Team& b) {
    return a.members_ == b.members_ && a.domain_ == b.domain_;
  }
  friend bool operator<(const Team& a, const Team& b) { return a.members_ < b.members_; }

  friend std::ostream& operator<<(std::ostream& os, const Team& t) {
    os << '{';
    for (std::size_t i = 0; i < t.members_.size(); ++i)
      os << (i ? ", " : "") << code_bits(t.members_[i], t.domain_.size());
    return os << '}';
  }

 private:
  Domain domain_;
  std::vector<ValuationCode> members_;
};

inline std::vector<Valuation> all_valuations(const Domain& d) {
  std::vector<Valuation> out;
  out.reserve(d.valuation_count());
  for (ValuationCode c = 0; c < d.valuation_count(); ++c) out.emplace_back(d, c);
  return out;
}

inline Team full_team(const Domain& d) {
  std::vector<ValuationCode> codes(d.valuation_count());
  for (ValuationCode c = 0; c < codes.size(); ++c) codes[c] = c;
  return Team(d, std::move(codes));
}

inline void require_mask_domain(const Domain& d) {
  if (d.size() > kMaxMaskDomainSize)
    throw CapExceeded("team masks need a domain of at most " + std::to_string(kMaxMaskDomainSize) +
                      " variables");
}

inline TeamMask team_mask(const Team& t) {
  require_mask_domain(t.domain());
  TeamMask m = 0;
  for (auto c : t.members()) m |= TeamMask{1} << c;
  return m;
}

inline Team team_from_mask(const Domain& d, TeamMask mask) {
  require_mask_domain(d);
  std::vector<ValuationCode> codes;
  for (ValuationCode c = 0; c < d.valuation_count(); ++c)
    if (mask & (TeamMask{1} << c)) codes.push_back(c);
  if (d.valuation_count() < 64 && (mask >> d.valuation_count()) != 0)
    throw DomainError("team mask has bits beyond the valuation count");
  return Team(d, std::move(codes));
}

// Characteristic vector over all_valuations order: bit i set iff valuation i is a member.
inline std::vector<bool> team_to_bits(const Team& t) {
  std::vector<bool> bits(t.domain().valuation_count(), false);
  for (auto c : t.members()) bits[c] = true;
  return bits;
}

inline Team bits_to_team(const Domain& d, const std::vector<bool>& bits) {
  if (bits.size() != d.valuation_count())
    throw DomainError("team bit vector has length " + std::to_string(bits.size()) + ", expected " +
                      std::to_string(d.valuation_count()));
  std::vector<ValuationCode> codes;
  for (ValuationCode c = 0; c < bits.size(); ++c)
    if (bits[c]) codes.push_back(c);
  return Team(d, std::move(codes));
}

inline void require_enumerable(const Domain& d, std::size_t cap) {
  if (d.size() > cap)
    throw CapExceeded("enumerating all teams over " + std::to_string(d.size()) +
                      " variables exceeds the cap of " + std::to_string(cap) + " (2^(2^n) teams)");
  require_mask_domain(d);
}

inline TeamMask team_count(const Domain& d) {
  require_mask_domain(d);
  // 2^(2^n); n = 6 would overflow and is refused by every enumerator.
  return d.valuation_count() >= 64 ? 0 : TeamMask{1} << d.valuation_count();
}

// All 2^(2^n) teams over a domain in canonical order, starting with the empty team.
class TeamRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Team;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const Domain* d, TeamMask m) : domain_(d), mask_(m) {}

    Team operator*() const { return team_from_mask(*domain_, mask_); }
    TeamMask mask() const noexcept { return mask_; }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++mask_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    const Domain* domain_ = nullptr;
    TeamMask mask_ = 0;
  };

  explicit TeamRange(Domain d, std::size_t cap = kDefaultTeamEnumerationCap) : domain_(std::move(d)) {
    if (cap > 5) throw CapExceeded("team enumeration cap cannot exceed 5 variables");
    require_enumerable(domain_, cap);
  }

  iterator begin() const { return {&domain_, 0}; }
  iterator end() const { return {&domain_, team_count(domain_)}; }
  TeamMask size() const { return team_count(domain_); }
  const Domain& domain() const noexcept { return domain_; }

 private:
  Domain domain_;
};

inline TeamRange all_teams(const Domain& d, std::size_t cap = kDefaultTeamEnumerationCap) {
  return TeamRange(d, cap);
}

}  // namespace cumteam
