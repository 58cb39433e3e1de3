#include <doctest.h>

#include "speclab/parser.hpp"
#include "speclab/printer.hpp"
#include "speclab/trace.hpp"
#include "test_support.hpp"

using namespace speclab;

TEST_CASE("eval on documented examples") {
  SUBCASE("G p on an all-p loop") {
    LassoTrace t{{}, {{"p"}}};
    CHECK(eval(parse("G p"), t));
  }
  SUBCASE("F(h && m) via the loop") {
    LassoTrace t{{{"h"}}, {{"h", "m", "p"}}};
    CHECK(eval(parse("F(h && m)"), t));
  }
  SUBCASE("X p fails when the next state is empty") {
    LassoTrace t{{{"p"}}, {{}}};
    CHECK_FALSE(eval(parse("X p"), t));
  }
}

TEST_CASE("positions beyond the representation wrap into the loop") {
  LassoTrace t{{{"a"}}, {{"b"}, {}}};
  Formula b = parse("b");
  CHECK(eval(b, t, 1));
  CHECK_FALSE(eval(b, t, 2));
  CHECK(eval(b, t, 3));   // wraps to loop start
  CHECK(eval(b, t, 99));  // odd offset into the loop
}

TEST_CASE("eval is loop-invariant past the prefix") {
  testing::FormulaGen gen(17, {"a", "b"});
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.random(4);
    LassoTrace t = gen.random_trace(3, 3);
    std::size_t start = t.prefix.size();
    CAPTURE(render(f));
    CHECK(eval(f, t, start) == eval(f, t, start + t.loop.size()));
    CHECK(eval(f, t, start + 1) == eval(f, t, start + 1 + 2 * t.loop.size()));
  }
}

TEST_CASE("until requires its left side to hold up to the fulfilment") {
  LassoTrace t{{{"a"}, {}, {"b"}}, {{}}};
  CHECK_FALSE(eval(parse("a U b"), t));
  LassoTrace good{{{"a"}, {"a"}, {"b"}}, {{}}};
  CHECK(eval(parse("a U b"), good));
}
