#pragma once

// Timing of team-semantics model checking as the team grows: the flat TPL
// engine against the generic PDL engine.
//
// Families:
//   random  fixed-shape random formulas (complete binary trees of depth 3) on random teams.
//   split   (dep(p1) & dep(p2)) | (dep(p1) & dep(p2)) on teams whose members cycle through all
//           four (p1, p2) patterns. The formula is false on every such team of size >= 3, so
//           the generic engine visits every split of the team.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cumteam/errors.hpp"
#include "cumteam/formula.hpp"
#include "cumteam/semantics.hpp"
#include "cumteam/teams.hpp"

namespace cumteam {

enum class BenchFamily { random, split };

inline std::string_view to_string(BenchFamily f) { return f == BenchFamily::random ? "random" : "split"; }

inline BenchFamily parse_bench_family(std::string_view s) {
  if (s == "random") return BenchFamily::random;
  if (s == "split") return BenchFamily::split;
  throw DomainError("unknown benchmark family '" + std::string(s) + "' (expected random or split)");
}

struct BenchConfig {
  Logic logic = Logic::tpl;
  BenchFamily family = BenchFamily::random;
  std::size_t min_team_size = 1;
  std::size_t max_team_size = 8;
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  // Minimum measured time per sample; short evaluations are repeated to reach it.
  std::chrono::nanoseconds min_sample_time = std::chrono::microseconds(200);
};

struct BenchRow {
  Logic logic;
  std::size_t team_size;
  std::size_t formula_size;
  std::uint64_t median_ns;
};

struct BenchCase {
  Formula formula;
  Team team;
};

namespace detail {

inline constexpr std::size_t kBenchFormulaDepth = 3;

inline std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

inline Formula bench_leaf(std::mt19937_64& rng, const Domain& d, bool allow_dep) {
  const Variable& v = d[pick(rng, d.size())];
  const std::size_t kinds = allow_dep ? 4 : 3;
  switch (pick(rng, kinds)) {
    case 0: return Formula::pos(v);
    case 1: return Formula::neg(v);
    case 2: return pick(rng, 2) ? Formula::pos(v) : Formula::neg(v);
    default: {
      std::vector<Variable> args;
      const Variable& a = d[pick(rng, d.size())];
      if (!(a == v) && pick(rng, 2)) args.push_back(a);
      return Formula::dep(std::move(args), v);
    }
  }
}

inline Formula bench_tree(std::mt19937_64& rng, const Domain& d, std::size_t depth, bool allow_dep) {
  if (depth == 0) return bench_leaf(rng, d, allow_dep);
  Formula l = bench_tree(rng, d, depth - 1, allow_dep);
  Formula r = bench_tree(rng, d, depth - 1, allow_dep);
  return pick(rng, 2) ? Formula::conj(l, r) : Formula::disj(l, r);
}

inline Team random_team(std::mt19937_64& rng, const Domain& d, std::size_t k) {
  std::vector<ValuationCode> codes(d.valuation_count());
  for (ValuationCode c = 0; c < codes.size(); ++c) codes[c] = c;
  for (std::size_t i = 0; i < k; ++i) std::swap(codes[i], codes[i + pick(rng, codes.size() - i)]);
  codes.resize(k);
  return Team(d, std::move(codes));
}

inline Domain bench_domain(std::size_t max_team_size) {
  std::size_t n = 2;
  while ((std::size_t{1} << n) < max_team_size) ++n;
  std::vector<Variable> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.emplace_back("p" + std::to_string(i));
  return Domain(std::move(vars));
}

}  // namespace detail

// The formula/team sequence for one configuration, in row order (team size, then trial).
inline std::vector<BenchCase> bench_cases(const BenchConfig& cfg) {
  if (cfg.min_team_size == 0 || cfg.min_team_size > cfg.max_team_size)
    throw DomainError("team sizes must satisfy 1 <= min <= max");
  if (cfg.trials == 0) throw DomainError("at least one trial is required");
  const std::size_t cap = cfg.logic == Logic::pdl ? EvalLimits{}.max_team_size : kHardMaxTeamSize;
  if (cfg.max_team_size > cap)
    throw CapExceeded("team size " + std::to_string(cfg.max_team_size) + " exceeds the engine cap of " +
                      std::to_string(cap));
  if (cfg.family == BenchFamily::split && cfg.logic != Logic::pdl)
    throw DomainError("the split family contains dependence atoms and needs --logic pdl");

  const Domain d = detail::bench_domain(cfg.max_team_size);
  std::mt19937_64 rng(cfg.seed);
  std::vector<BenchCase> out;
  for (std::size_t k = cfg.min_team_size; k <= cfg.max_team_size; ++k)
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      if (cfg.family == BenchFamily::split) {
        const Formula c = Formula::conj(Formula::dep({}, d[0]), Formula::dep({}, d[1]));
        std::vector<ValuationCode> codes;
        const std::size_t low = d.size() - 2;
        for (std::size_t i = 0; i < k; ++i)
          codes.push_back(static_cast<ValuationCode>(((i % 4) << low) | (i / 4)));
        out.push_back({Formula::disj(c, c), Team(d, std::move(codes))});
      } else {
        Formula f = detail::bench_tree(rng, d, detail::kBenchFormulaDepth, cfg.logic == Logic::pdl);
        out.push_back({std::move(f), detail::random_team(rng, d, k)});
      }
    }
  return out;
}

// Median nanoseconds per evaluation for each team size.
inline std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  using clock = std::chrono::steady_clock;
  const auto cases = bench_cases(cfg);
  std::vector<BenchRow> rows;
  std::size_t next = 0;
  volatile bool sink = false;
  for (std::size_t k = cfg.min_team_size; k <= cfg.max_team_size; ++k) {
    std::vector<std::uint64_t> samples;
    std::size_t size = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t, ++next) {
      const auto& c = cases[next];
      size = formula_size(c.formula);
      std::uint64_t reps = 0;
      const auto start = clock::now();
      auto elapsed = clock::duration::zero();
      do {
        sink = cfg.logic == Logic::tpl ? eval_team_flat(c.team, c.formula) : eval_team(c.team, c.formula);
        ++reps;
        elapsed = clock::now() - start;
      } while (elapsed < cfg.min_sample_time);
      samples.push_back(static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count() / reps));
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    const std::uint64_t median =
        samples.size() % 2 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
    rows.push_back({cfg.logic, k, size, median});
  }
  (void)sink;
  return rows;
}

}  // namespace cumteam
