#include <doctest.h>

#include "speclab/nnf.hpp"
#include "speclab/printer.hpp"
#include "speclab/trace.hpp"
#include "test_support.hpp"

using namespace speclab;

namespace {

bool in_core(const Formula& f) {
  switch (f.kind()) {
    case Kind::True:
    case Kind::False:
    case Kind::Atom:
      return true;
    case Kind::Not:
      return f.left().kind() == Kind::Atom;
    case Kind::And:
    case Kind::Or:
    case Kind::Until:
    case Kind::Release:
      return in_core(f.left()) && in_core(f.right());
    case Kind::Next:
      return in_core(f.left());
    default:
      return false;
  }
}

}  // namespace

TEST_CASE("nnf examples") {
  Formula p = Formula::ap("p");
  Formula a = Formula::ap("a");
  Formula b = Formula::ap("b");

  CHECK(nnf(Formula::Not(Formula::G(p))) ==
        Formula::U(Formula::tt(), Formula::Not(p)));
  CHECK(nnf(p) == p);
  CHECK(nnf(Formula::Not(Formula::U(a, b))) ==
        Formula::R(Formula::Not(a), Formula::Not(b)));
}

TEST_CASE("nnf output stays in the solver core") {
  testing::FormulaGen gen(11, {"a", "b", "c"});
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.random(5);
    CAPTURE(render(f));
    CHECK(in_core(nnf(f)));
  }
}

TEST_CASE("nnf preserves semantics on random lasso traces") {
  testing::FormulaGen gen(13, {"a", "b", "c"});
  for (int i = 0; i < 400; ++i) {
    Formula f = gen.random(5);
    LassoTrace t = gen.random_trace(4, 3);
    CAPTURE(render(f));
    CHECK(eval(f, t, 0) == eval(nnf(f), t, 0));
  }
}
