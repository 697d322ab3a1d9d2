#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace cumteam;
using gen::Rng;

namespace {

const Domain d1 = gen::domain_of_size(1);
const Domain d2 = gen::domain_of_size(2);

std::vector<Formula> formulas(std::initializer_list<const char*> texts) {
  std::vector<Formula> out;
  for (auto t : texts) out.push_back(parse(t));
  return out;
}

// A random model that passes verify_cumulative on the universe.
RelationalModel cumulative_model(Rng& rng, const Domain& d, const std::vector<Formula>& u) {
  for (;;) {
    const std::size_t n = 1 + gen::pick(rng, 6);
    auto states = gen::random_states(rng, d, n, 3);
    auto rel = gen::coin(rng) ? gen::random_strict_order(rng, n) : gen::random_relation(rng, n, 0.25);
    RelationalModel m(d, std::move(states), std::move(rel));
    if (verify_cumulative(m, u).passed) return m;
  }
}

}  // namespace

TEST(InducedRelation, TrivialModel) {
  const auto u = formulas({"T", "p"});
  for (const auto& t : all_teams(d1)) {
    RelationalModel m(d1, {{"s0", {t}}}, {});
    const auto r = induced_relation(m, u);
    EXPECT_TRUE(r.contains(0, 0));
    EXPECT_TRUE(r.contains(1, 1));
    EXPECT_TRUE(r.contains(1, 0));
    EXPECT_EQ(r.contains(0, 1), eval_team(t, parse("p")));
  }
}

TEST(InducedRelation, EmptyRelationIsMonotone) {
  Rng rng(41);
  const auto u = formulas({"T", "p", "~q", "dep(p)", "p | q"});
  for (int i = 0; i < 50; ++i) {
    RelationalModel m(d2, gen::random_states(rng, d2, 4, 3), {});
    const auto r = induced_relation(m, u);
    for (std::size_t a = 0; a < u.size(); ++a)
      for (std::size_t b = 0; b < u.size(); ++b) {
        bool expected = true;
        for (auto s : states_of(m, u[a])) expected = expected && label_satisfies(m, s, u[b]);
        ASSERT_EQ(r.contains(a, b), expected);
      }
    for (std::size_t a = 0; a < u.size(); ++a) ASSERT_TRUE(r.contains(a, a));
  }
}

TEST(InducedRelation, LleInstantiation) {
  Rng rng(42);
  const auto u = formulas({"p & q", "q & p", "p", "q | p", "p | q", "dep(p) | dep(p)", "dep(p)"});
  for (int i = 0; i < 100; ++i) {
    const RelationalModel m = gen::random_model(rng, {.min_vars = 2});
    const auto r = induced_relation(m, u);
    for (std::size_t a = 0; a < u.size(); ++a)
      for (std::size_t b = 0; b < u.size(); ++b) {
        if (!semantic_equiv(u[a], u[b], m.domain(), Logic::pdl)) continue;
        for (std::size_t c = 0; c < u.size(); ++c) ASSERT_EQ(r.contains(a, c), r.contains(b, c));
      }
  }
}

TEST(CheckRule, MissingReflexivePair) {
  const auto u = formulas({"T", "p"});
  EntailmentRelation r(d1, u, {{0, 0}, {1, 0}});
  const auto v = check_rule(r, Rule::ref);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].conclusion, (FormulaPair{1, 1}));
  EXPECT_EQ(describe(r, v[0]), "Ref: missing p |~ p");
}

TEST(CheckRule, FullRelationPassesEverything) {
  const auto u = conjunction_closure(d2, formulas({"p", "dep(q)", "p | q"}), Logic::pdl);
  std::set<FormulaPair> all;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) all.insert({i, j});
  EntailmentRelation r(d2, u, all);
  for (Rule rule : kSystemCRules) EXPECT_TRUE(check_rule(r, rule).empty()) << to_string(rule);
  EXPECT_TRUE(check_system_c(r).passed);
}

TEST(CheckRule, RequiresConjunctionClosureForCmAndCut) {
  EntailmentRelation r(d2, formulas({"p", "q"}), {{0, 0}, {1, 1}});
  EXPECT_THROW(check_rule(r, Rule::cm), ModelError);
  EXPECT_THROW(check_rule(r, Rule::cut), ModelError);
  EXPECT_NO_THROW(check_rule(r, Rule::ref));
  EXPECT_NO_THROW(check_rule(r, Rule::lle));
  EXPECT_NO_THROW(check_rule(r, Rule::rw));
}

TEST(CheckRule, EachRuleDetectsItsViolation) {
  // universe: p, p & q, q, T; closed up to equivalence
  const auto u = formulas({"p", "p & q", "q", "T"});
  const detail::UniverseFacts facts(d2, u, Logic::pdl);
  ASSERT_TRUE(facts.conjunction(0, 2));
  std::set<FormulaPair> refl{{0, 0}, {1, 1}, {2, 2}, {3, 3}};

  // RW: p & q |= p but p & q |~ p is missing
  EntailmentRelation rw(d2, u, refl);
  EXPECT_FALSE(check_rule(rw, Rule::rw).empty());

  // CM: T |~ p and T |~ q, but not p |~ q (p stands for T & p)
  auto closed_rw = [&](std::set<FormulaPair> pairs) {
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < u.size(); ++j)
        for (std::size_t k = 0; k < u.size(); ++k)
          if (pairs.count({k, i}) && facts.entails(i, j)) pairs.insert({k, j});
    return pairs;
  };
  auto cm_pairs = closed_rw({{0, 0}, {1, 1}, {2, 2}, {3, 3}, {3, 0}, {3, 2}});
  cm_pairs.erase({0, 2});
  EntailmentRelation cm(d2, u, cm_pairs);
  EXPECT_FALSE(check_rule(cm, Rule::cm).empty());

  // Cut: p & q |~ ... is trivial; use T |~ p and p |~ q (T & p is p) without T |~ q
  auto cut_pairs = closed_rw({{0, 0}, {1, 1}, {2, 2}, {3, 3}, {3, 0}, {0, 2}});
  cut_pairs.erase({3, 2});
  EntailmentRelation cut(d2, u, cut_pairs);
  EXPECT_FALSE(check_rule(cut, Rule::cut).empty());
}

TEST(CheckRule, LleDetectsViolation) {
  const auto u = formulas({"p | q", "q | p", "p"});
  EntailmentRelation r(d2, u, {{0, 0}, {1, 1}, {2, 2}, {0, 2}});
  const auto v = check_rule(r, Rule::lle);
  ASSERT_EQ(v.size(), 3u);  // q | p |~ p, q | p |~ p | q, p | q |~ q | p
}

TEST(CheckSystemC, EmptyUniversePasses) { EXPECT_TRUE(check_system_c(EntailmentRelation(d1, {}, {})).passed); }

TEST(CheckSystemC, TrivialModelPasses) {
  const auto u = conjunction_closure(d2, formulas({"p", "dep(q)", "~p | q"}), Logic::pdl);
  for (const auto& t : all_teams(d2)) {
    RelationalModel m(d2, {{"s0", {t}}}, {});
    ASSERT_TRUE(check_system_c(induced_relation(m, u)).passed) << t;
  }
}

TEST(CheckSystemC, CumulativeModelsAreSound) {
  Rng rng(43);
  int checked = 0;
  while (checked < 60) {
    const Domain d = gen::domain_of_size(1 + gen::pick(rng, 2));
    const auto u = gen::closed_universe(rng, d, 8);
    if (u.empty()) continue;
    const RelationalModel m = cumulative_model(rng, d, u);
    const auto report = check_system_c(induced_relation(m, u));
    ASSERT_TRUE(report.passed) << report;
    ++checked;
  }
}

TEST(CheckSystemC, NonSmoothChainBreaksCumulativeMonotony) {
  // a R b, b R c without a R c. S(T) = {a,b,c} is not smooth: c lies above no minimal state.
  // T |~ ~p and T |~ ~q (a is the only minimal state), but S(~p) = {a, c} has c minimal and c fails ~q.
  RelationalModel m(d2, {{"a", {Team::parse(d2, "00")}}, {"b", {Team::parse(d2, "10")}}, {"c", {Team::parse(d2, "01")}}},
                    {{0, 1}, {1, 2}});
  const auto u = conjunction_closure(d2, formulas({"T", "~p", "~q"}), Logic::pdl);
  EXPECT_FALSE(verify_cumulative(m, u).passed);
  const auto r = induced_relation(m, u);
  EXPECT_FALSE(check_rule(r, Rule::cm).empty());
  EXPECT_FALSE(check_system_c(r).passed);
}

TEST(Mutation, RemovingReflexivePairIsDetected) {
  Rng rng(44);
  int checked = 0;
  while (checked < 40) {
    const Domain d = gen::domain_of_size(1 + gen::pick(rng, 2));
    const auto u = gen::closed_universe(rng, d, 8);
    if (u.empty()) continue;
    const RelationalModel m = cumulative_model(rng, d, u);
    auto r = induced_relation(m, u);
    const std::size_t i = gen::pick(rng, u.size());
    r.erase(i, i);
    ASSERT_FALSE(check_system_c(r).passed);
    ++checked;
  }
}

TEST(Mutation, RemovingAnEntailedConclusionBreaksRightWeakening) {
  const auto u = conjunction_closure(d2, formulas({"p", "T", "q"}), Logic::pdl);
  RelationalModel m(d2, {{"s0", {full_team(d2)}}}, {});
  const auto base = induced_relation(m, u);
  ASSERT_TRUE(check_system_c(base).passed);
  const std::size_t top = 1;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i == top) continue;
    auto r = base;
    r.erase(i, top);
    EXPECT_FALSE(check_rule(r, Rule::rw).empty()) << render(u[i]);
  }
}

TEST(ConjunctionClosure, ProducesClosedUniverse) {
  const auto u = conjunction_closure(d2, formulas({"p", "q", "dep(p)"}), Logic::pdl);
  const detail::UniverseFacts facts(d2, u, Logic::pdl);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) EXPECT_TRUE(facts.conjunction(i, j));
  EXPECT_GT(u.size(), 3u);
  EXPECT_EQ(conjunction_closure(d2, formulas({"p"}), Logic::pdl).size(), 1u);
}
