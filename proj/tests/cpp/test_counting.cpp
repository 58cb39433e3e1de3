#include <doctest.h>

#include "speclab/counting.hpp"
#include "speclab/errors.hpp"
#include "speclab/parser.hpp"
#include "speclab/printer.hpp"
#include "test_support.hpp"

using namespace speclab;

namespace {

// Independent oracle: enumerate every length-k word over 2^vocab and decide
// extendability by satisfiability of the constraints conjoined with exact
// per-step state formulas.
BigInt enumerate_extendable(const std::vector<Formula>& constraints,
                            const std::vector<std::string>& vocab,
                            unsigned k) {
  const std::size_t letters = std::size_t(1) << vocab.size();
  Formula base = Formula::conjoin(constraints);
  BigInt count(0);
  std::vector<std::size_t> word(k, 0);
  while (true) {
    Formula step_chain = Formula::tt();
    for (unsigned i = 0; i < k; ++i) {
      std::vector<Formula> lits;
      for (std::size_t b = 0; b < vocab.size(); ++b) {
        Formula atom = Formula::ap(vocab[b]);
        lits.push_back((word[i] >> b & 1) ? atom : Formula::Not(atom));
      }
      Formula cube = Formula::conjoin(lits);
      for (unsigned x = 0; x < i; ++x) cube = Formula::X(cube);
      step_chain = Formula::And(step_chain, cube);
    }
    if (is_sat(Formula::And(base, step_chain), {}, vocab).sat())
      count += BigInt(1);
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++word[i] < letters) break;
      word[i] = 0;
    }
    if (i == k) break;
  }
  return count;
}

}  // namespace

TEST_CASE("documented counting examples") {
  SUBCASE("G p over {p}: one word per length") {
    CountResult r = count_prefixes({parse("G p")}, {"p"}, 3);
    CHECK(r.count == BigInt(1));
    CHECK(r.alphabet_size == 2);
  }
  SUBCASE("F p over {p} at k = 1: both letters extend") {
    CountResult r = count_prefixes({parse("F p")}, {"p"}, 1);
    CHECK(r.count == BigInt(2));
  }
  SUBCASE("trivially true and false constraint sets") {
    CountResult top = count_prefixes({Formula::tt()}, {"a", "b"}, 3);
    CHECK(top.count == BigInt::pow(BigInt(4), 3));
    CountResult bottom = count_prefixes({Formula::ff()}, {"a", "b"}, 3);
    CHECK(bottom.count == BigInt(0));
  }
}

TEST_CASE("MinePump Dom prefix counts match brute force") {
  Spec spec = testing::minepump();
  std::vector<Formula> dom{spec.dom[0].formula};

  CountResult k2 = count_prefixes(dom, spec.vocab, 2);
  // No three-step window fits in two letters, so every word extends.
  CHECK(k2.count == BigInt(64));
  CHECK(k2.count == enumerate_extendable(dom, spec.vocab, 2));

  CountResult k4 = count_prefixes(dom, spec.vocab, 4);
  // 4096 words minus those violating the pump window internally.
  CHECK(k4.count == BigInt(3200));
  CHECK(k4.count == enumerate_extendable(dom, spec.vocab, 4));
}

TEST_CASE("counting is monotone under implication") {
  Formula hm = parse("h && m");
  Formula f_hm = parse("F(h && m)");
  std::vector<std::string> vocab{"h", "m"};
  for (unsigned k = 1; k <= 4; ++k) {
    CountResult narrow = count_prefixes({hm}, vocab, k);
    CountResult wide = count_prefixes({f_hm}, vocab, k);
    CHECK(narrow.count <= wide.count);
  }
}

TEST_CASE("determinized counts equal direct enumeration on random inputs") {
  testing::FormulaGen gen(31, {"a", "b"});
  std::vector<std::string> vocab{"a", "b"};
  for (int i = 0; i < 40; ++i) {
    Formula f = gen.random(4);
    CAPTURE(render(f));
    for (unsigned k = 1; k <= 3; ++k) {
      CountResult engine = count_prefixes({f}, vocab, k);
      CHECK(engine.count == enumerate_extendable({f}, vocab, k));
    }
  }
}

TEST_CASE("vocabulary cap and k validation") {
  std::vector<std::string> big;
  for (int i = 0; i < 13; ++i) big.push_back("p" + std::to_string(i));
  CHECK_THROWS_AS(count_prefixes({Formula::tt()}, big, 2),
                  VocabularyTooLargeError);
  CHECK_THROWS_AS(count_prefixes({Formula::tt()}, {"a"}, 0), SpecError);
}
