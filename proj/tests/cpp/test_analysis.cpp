#include <doctest.h>

#include "speclab/analysis.hpp"
#include "speclab/errors.hpp"
#include "speclab/parser.hpp"
#include "speclab/printer.hpp"
#include "test_support.hpp"

using namespace speclab;

TEST_CASE("MinePump boundary-condition verdicts") {
  Spec spec = testing::minepump();

  SUBCASE("phi1, phi2, phi3 are BCs") {
    for (const char* name : {"phi1", "phi2", "phi3"}) {
      BcVerdict v = check_bc(spec, testing::fixture(spec, name));
      CAPTURE(name);
      REQUIRE_FALSE(v.unknown);
      CHECK(v.is_bc());
    }
  }

  SUBCASE("the goal negation fails exactly non-triviality") {
    Formula neg_goals = Formula::Not(Formula::And(spec.goals[0].formula,
                                                  spec.goals[1].formula));
    BcVerdict v = check_bc(spec, neg_goals);
    REQUIRE_FALSE(v.unknown);
    CHECK_FALSE(v.is_bc());
    CHECK(v.inconsistency_holds);
    CHECK(v.minimality_holds());
    CHECK(v.failure_reason() == BcFailure::Triviality);
  }

  SUBCASE("phi3 && !phi1 fails minimality via the NoExplosion drop") {
    Formula phi = Formula::And(testing::fixture(spec, "phi3"),
                               Formula::Not(testing::fixture(spec, "phi1")));
    BcVerdict v = check_bc(spec, phi);
    REQUIRE_FALSE(v.unknown);
    CHECK_FALSE(v.is_bc());
    CHECK(v.failure_reason() == BcFailure::Minimality);
    // Dom && g1 && phi is the unsatisfiable combination, i.e. the entry
    // that drops NoExplosion.
    REQUIRE(v.failing_goal().has_value());
    CHECK(v.minimality[*v.failing_goal()].dropped_goal_id == "NoExplosion");
  }

  SUBCASE("false fails minimality, so contradictions are never BCs") {
    BcVerdict v = check_bc(spec, Formula::ff());
    CHECK_FALSE(v.is_bc());
    CHECK(v.failure_reason() == BcFailure::Minimality);
  }

  SUBCASE("minimality witnesses satisfy their defining conjunction") {
    BcVerdict v = check_bc(spec, testing::fixture(spec, "phi1"));
    for (std::size_t i = 0; i < v.minimality.size(); ++i) {
      REQUIRE(v.minimality[i].holds);
      REQUIRE(v.minimality[i].witness.has_value());
      Formula conj = Formula::And(
          Formula::And(spec.dom_conjunction(), spec.goals_except(i)),
          testing::fixture(spec, "phi1"));
      CHECK(eval(conj, *v.minimality[i].witness, 0));
    }
  }
}

TEST_CASE("generality relation") {
  Formula hm = parse("h && m");
  Formula f_hm = parse("F(h && m)");
  CHECK(is_more_general(f_hm, hm));
  CHECK_FALSE(is_more_general(hm, f_hm));
  CHECK(is_more_general(hm, hm));
}

TEST_CASE("witness and contrasty matrix on the MinePump fixtures") {
  Spec spec = testing::minepump();
  Formula phi1 = testing::fixture(spec, "phi1");
  Formula phi2 = testing::fixture(spec, "phi2");
  Formula phi3 = testing::fixture(spec, "phi3");

  CHECK(is_witness(spec, phi1, phi3));
  CHECK_FALSE(is_witness(spec, phi3, phi1));
  CHECK(is_witness(spec, phi1, phi2));
  CHECK_FALSE(is_witness(spec, phi2, phi1));
  // Self-witnessing is trivially true: phi && !phi is unsatisfiable.
  CHECK(is_witness(spec, phi1, phi1));

  CHECK(are_contrastive(spec, phi2, phi3));
  CHECK_FALSE(are_contrastive(spec, phi1, phi3));
  CHECK_FALSE(are_contrastive(spec, phi1, phi2));
  CHECK_THROWS_AS(are_contrastive(spec, phi1, phi1), SpecError);
}

TEST_CASE("implication makes the wider side a witness") {
  Spec spec = testing::minepump();
  Formula phi1 = testing::fixture(spec, "phi1");
  Formula phi2 = testing::fixture(spec, "phi2");
  // phi2 implies phi1, so phi1 witnesses phi2.
  REQUIRE(implies(phi2, phi1));
  CHECK(is_witness(spec, phi1, phi2));
}

TEST_CASE("likelihood basics") {
  Spec spec = testing::minepump();

  SUBCASE("top and bottom") {
    LikelihoodValue top = likelihood(spec, Formula::tt(), 4);
    CHECK(top.numerator == top.denominator);
    CHECK(top.value() == doctest::Approx(1.0));
    LikelihoodValue bottom = likelihood(spec, Formula::ff(), 4);
    CHECK(bottom.numerator == BigInt(0));
    CHECK(bottom.value() == doctest::Approx(0.0));
  }

  SUBCASE("phi2 restricts the first letter to a quarter of the alphabet") {
    LikelihoodValue v = likelihood(spec, testing::fixture(spec, "phi2"), 4);
    CHECK(v.denominator == BigInt(3200));
    CHECK(v.numerator == BigInt(800));
  }

  SUBCASE("monotone under implication") {
    Formula phi1 = testing::fixture(spec, "phi1");
    Formula phi2 = testing::fixture(spec, "phi2");
    LikelihoodValue narrow = likelihood(spec, phi2, 4);
    LikelihoodValue wide = likelihood(spec, phi1, 4);
    CHECK(narrow.compare(wide) <= 0);
  }

  SUBCASE("unsatisfiable Dom is a division error") {
    Spec broken = spec;
    broken.dom.push_back(NamedFormula{"absurd", "", Formula::ff()});
    CHECK_THROWS_AS(likelihood(broken, Formula::tt(), 2), DomUnsatError);
  }
}

TEST_CASE("termination condition") {
  Spec spec = testing::minepump();
  // BCs exist, so no index can certify their absence.
  CHECK_FALSE(termination_condition(spec).has_value());

  Spec duplicate = parse_spec_text(
      "props p\ngoal g1: G p\ngoal g2: G p\n", "dup-goal");
  auto idx = termination_condition(duplicate);
  REQUIRE(idx.has_value());
  CHECK(*idx == 0);
}

TEST_CASE("avoid pattern instantiation") {
  Spec empty_dom = parse_spec_text(
      "props p q\ngoal g1: G(p -> F q)\ngoal g2: G(q -> F (! p))\n", "rp");
  Formula b = Formula::ap("p");
  CHECK(avoid_pattern(empty_dom, b) ==
        Formula::G(Formula::Implies(Formula::tt(),
                                    Formula::G(Formula::Not(b)))));

  Spec spec = testing::minepump();
  Formula phi1 = testing::fixture(spec, "phi1");
  CHECK(avoid_pattern(spec, phi1) ==
        Formula::G(Formula::Implies(spec.dom[0].formula,
                                    Formula::G(Formula::Not(phi1)))));
}
