#include <doctest.h>

#include "speclab/formula.hpp"
#include "speclab/parser.hpp"
#include "test_support.hpp"

using namespace speclab;

TEST_CASE("hash-consing gives pointer equality for equal structure") {
  Formula a = Formula::And(Formula::ap("h"), Formula::ap("m"));
  Formula b = Formula::And(Formula::ap("h"), Formula::ap("m"));
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(Formula::ap("h") != Formula::ap("m"));
  CHECK(Formula::tt() != Formula::ff());
}

TEST_CASE("size counts temporal operators, connectives, and literals") {
  Formula h = Formula::ap("h");
  Formula m = Formula::ap("m");
  // F (h && m): eventuality, conjunction, two literals.
  CHECK(Formula::F(Formula::And(h, m)).size() == 4);
  CHECK(h.size() == 1);
  CHECK(Formula::tt().size() == 1);
  // A negated atom is a single literal; other negations count as a
  // connective.
  CHECK(Formula::Not(h).size() == 1);
  CHECK(Formula::Not(Formula::And(h, m)).size() == 4);

  SUBCASE("size is one per node plus subtree sizes") {
    testing::FormulaGen gen(7, {"a", "b", "c"});
    for (int i = 0; i < 200; ++i) {
      Formula f = gen.random(5);
      CHECK(f.size() >= 1);
      if (f.is_binary() && !f.is_literal())
        CHECK(f.size() == 1 + f.left().size() + f.right().size());
      if (f.kind() == Kind::Next || f.kind() == Kind::Eventually ||
          f.kind() == Kind::Always)
        CHECK(f.size() == 1 + f.left().size());
    }
  }
}

TEST_CASE("MinePump corpus sizes stay within the manifest tolerance") {
  Spec spec = testing::minepump();
  int total = 0;
  for (const auto& d : spec.dom) total += d.formula.size();
  for (const auto& g : spec.goals) total += g.formula.size();
  // Published size is 21; the counting convention differs by at most 2.
  CHECK(std::abs(total - 21) <= 2);
  CHECK(testing::fixture(spec, "phi1").size() == 4);
  CHECK(testing::fixture(spec, "phi2").size() == 3);
}

TEST_CASE("atoms are collected over the whole tree") {
  Formula f = parse("G((p && X p) -> X (X (! h)))");
  auto atoms = f.atoms();
  CHECK(atoms == std::set<std::string>{"h", "p"});
}
