#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "speclab/errors.hpp"
#include "speclab/spec.hpp"
#include "test_support.hpp"

using namespace speclab;

TEST_CASE("minepump.spec loads with the published shape") {
  Spec spec = testing::minepump();
  CHECK(spec.dom.size() == 1);
  CHECK(spec.goals.size() == 2);
  CHECK(spec.vocab == std::vector<std::string>{"h", "m", "p"});
  CHECK(spec.fixtures.size() == 4);
}

TEST_CASE("analysis loading rejects single-goal specs") {
  std::string text = "props a b\ngoal only: G(a -> X b)\n";
  CHECK_THROWS_AS(parse_spec_text(text, "one-goal"), SpecError);
  // Manifest-style loading still works.
  Spec spec = parse_spec_text(text, "one-goal", false);
  CHECK(spec.goals.size() == 1);
}

TEST_CASE("unknown propositions and duplicate names are rejected") {
  CHECK_THROWS_AS(
      parse_spec_text("props a\ngoal g1: G(a -> X q)\ngoal g2: a\n", "bad"),
      ParseError);
  CHECK_THROWS_AS(parse_spec_text(
                      "props a b\ngoal g1: a\ngoal g1: b\n", "dup"),
                  SpecError);
  CHECK_THROWS_AS(parse_spec_text("props a a\ngoal g1: a\ngoal g2: a\n",
                                  "dupprop"),
                  SpecError);
}

TEST_CASE("inconsistent Dom && G is a hard load error") {
  std::string text =
      "props a b\n"
      "dom d1: G (! a)\n"
      "goal g1: F a\n"
      "goal g2: G b\n";
  CHECK_THROWS_AS(parse_spec_text(text, "inconsistent"), SpecError);
}

TEST_CASE("corpus manifest statistics hold for every bundled spec") {
  std::ifstream in(testing::corpus_path("manifest.json"));
  REQUIRE(in.good());
  nlohmann::json manifest = nlohmann::json::parse(in);
  int available = 0;
  for (const auto& entry : manifest["cases"]) {
    if (!entry["available"].get<bool>()) continue;
    ++available;
    Spec spec = load_spec(
        testing::corpus_path(entry["file"].get<std::string>()), false);
    CAPTURE(entry["short"].get<std::string>());
    CHECK(spec.dom.size() == entry["dom"].get<std::size_t>());
    CHECK(spec.goals.size() == entry["goals"].get<std::size_t>());
    CHECK(spec.vocab.size() == entry["vars"].get<std::size_t>());
    int total = 0;
    for (const auto& d : spec.dom) total += d.formula.size();
    for (const auto& g : spec.goals) total += g.formula.size();
    CHECK(std::abs(total - entry["size"].get<int>()) <= 2);
  }
  CHECK(available == 6);
  CHECK(manifest["cases"].size() == 16);
}

TEST_CASE("augmentation adds negated constraints to Dom") {
  Spec spec = testing::minepump();
  Formula phi1 = testing::fixture(spec, "phi1");
  Spec augmented = spec.with_negated_constraints({{"phi1", phi1}});
  CHECK(augmented.dom.size() == spec.dom.size() + 1);
  CHECK(augmented.dom.back().formula == Formula::Not(phi1));
  CHECK(augmented.goals.size() == spec.goals.size());
}
