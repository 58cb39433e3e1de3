#include <doctest.h>

#include <algorithm>

#include "speclab/analysis.hpp"
#include "speclab/parser.hpp"
#include "speclab/printer.hpp"
#include "speclab/search.hpp"
#include "test_support.hpp"

using namespace speclab;

TEST_CASE("pattern search yields verified BCs in a fixed order") {
  Spec spec = testing::minepump();
  PatternSearcher searcher;
  std::vector<BcEntry> yields = searcher.find_all(spec, 12);
  REQUIRE_FALSE(yields.empty());

  // The goal-violation family leads; its first MinePump instance covers the
  // whole NoFlooding-violation region.
  CHECK(yields.front().formula == parse("F(h && (m || X (! p)))"));

  // The early yields include the canonical eventuality BC.
  bool has_phi1 = false;
  for (const BcEntry& e : yields)
    if (e.formula == parse("F(h && m)")) has_phi1 = true;
  CHECK(has_phi1);

  for (const BcEntry& e : yields) {
    CAPTURE(render(e.formula));
    CHECK(check_bc(spec, e.formula).is_bc());
  }
}

TEST_CASE("pattern search is deterministic") {
  Spec spec = testing::minepump();
  PatternSearcher a, b;
  std::vector<BcEntry> ya = a.find_all(spec, 10);
  std::vector<BcEntry> yb = b.find_all(spec, 10);
  REQUIRE(ya.size() == yb.size());
  for (std::size_t i = 0; i < ya.size(); ++i) {
    CHECK(ya[i].id == yb[i].id);
    CHECK(ya[i].formula == yb[i].formula);
  }
}

TEST_CASE("no yields when the no-BC certificate holds") {
  Spec spec = parse_spec_text("props p q\ngoal g1: G p\ngoal g2: G p\n",
                              "dup-goal");
  REQUIRE(termination_condition(spec).has_value());
  PatternSearcher searcher;
  CHECK(searcher.find_all(spec, 4).empty());
  CHECK_FALSE(searcher.find_one(spec).has_value());
}

TEST_CASE("search bias under augmented domains") {
  // Any BC found under Dom + !phi2 must not be witnessed by phi2.
  Spec spec = testing::minepump();
  Formula phi2 = testing::fixture(spec, "phi2");
  Spec augmented = spec.with_negated_constraints({{"phi2", phi2}});
  PatternSearcher searcher;
  for (const BcEntry& e : searcher.find_all(augmented, 5)) {
    CAPTURE(render(e.formula));
    CHECK(check_bc(augmented, e.formula).is_bc());
    CHECK_FALSE(is_witness(spec, phi2, e.formula));
  }
}

TEST_CASE("genetic search finds BCs on nearly every seed") {
  Spec spec = testing::minepump();
  int successes = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GaConfig config;
    config.seed = seed;
    GeneticSearcher searcher(config);
    auto found = searcher.find_one(spec);
    if (!found) continue;
    ++successes;
    CAPTURE(render(found->formula));
    CHECK(check_bc(spec, found->formula).is_bc());
  }
  CHECK(successes >= 9);
}

TEST_CASE("genetic search is reproducible per seed") {
  Spec spec = testing::minepump();
  GaConfig config;
  config.seed = 7;
  GeneticSearcher a(config), b(config);
  std::vector<BcEntry> ya = a.find_all(spec, 5);
  std::vector<BcEntry> yb = b.find_all(spec, 5);
  REQUIRE(ya.size() == yb.size());
  for (std::size_t i = 0; i < ya.size(); ++i) {
    CHECK(ya[i].formula == yb[i].formula);
    CHECK(ya[i].iteration == yb[i].iteration);
  }
}

TEST_CASE("genetic yields are never the trivial goal negation") {
  Spec spec = testing::minepump();
  Formula neg_goals = Formula::Not(spec.goal_conjunction());
  GaConfig config;
  config.seed = 3;
  GeneticSearcher searcher(config);
  for (const BcEntry& e : searcher.find_all(spec, 6)) {
    CAPTURE(render(e.formula));
    bool equivalent = implies(e.formula, neg_goals) &&
                      implies(neg_goals, e.formula);
    CHECK_FALSE(equivalent);
  }
}
