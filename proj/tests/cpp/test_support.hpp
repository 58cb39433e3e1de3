#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "speclab/formula.hpp"
#include "speclab/spec.hpp"
#include "speclab/trace.hpp"

#ifndef SPECLAB_TEST_CORPUS_DIR
#define SPECLAB_TEST_CORPUS_DIR "corpus"
#endif

namespace speclab::testing {

inline std::string corpus_path(const std::string& name) {
  return std::string(SPECLAB_TEST_CORPUS_DIR) + "/" + name;
}

inline Spec minepump() { return load_spec(corpus_path("minepump.spec")); }

inline Formula fixture(const Spec& spec, const std::string& id) {
  const NamedFormula* f = spec.find_fixture(id);
  REQUIRE(f != nullptr);
  return f->formula;
}

// Seeded random formula generator for property tests.
class FormulaGen {
 public:
  FormulaGen(std::uint64_t seed, std::vector<std::string> props)
      : rng_(seed), props_(std::move(props)) {}

  Formula random(int max_depth) {
    if (max_depth <= 0 || rng_() % 4 == 0) return leaf();
    switch (rng_() % 11) {
      case 0:
        return Formula::Not(random(max_depth - 1));
      case 1:
        return Formula::And(random(max_depth - 1), random(max_depth - 1));
      case 2:
        return Formula::Or(random(max_depth - 1), random(max_depth - 1));
      case 3:
        return Formula::Implies(random(max_depth - 1), random(max_depth - 1));
      case 4:
        return Formula::X(random(max_depth - 1));
      case 5:
        return Formula::U(random(max_depth - 1), random(max_depth - 1));
      case 6:
        return Formula::R(random(max_depth - 1), random(max_depth - 1));
      case 7:
        return Formula::F(random(max_depth - 1));
      case 8:
        return Formula::G(random(max_depth - 1));
      case 9:
        return Formula::W(random(max_depth - 1), random(max_depth - 1));
      default:
        return leaf();
    }
  }

  LassoTrace random_trace(std::size_t max_prefix, std::size_t max_loop) {
    LassoTrace t;
    std::size_t prefix = rng_() % (max_prefix + 1);
    std::size_t loop = 1 + rng_() % max_loop;
    for (std::size_t i = 0; i < prefix; ++i) t.prefix.push_back(state());
    for (std::size_t i = 0; i < loop; ++i) t.loop.push_back(state());
    return t;
  }

 private:
  Formula leaf() {
    switch (rng_() % 6) {
      case 0:
        return Formula::tt();
      case 1:
        return Formula::ff();
      default:
        return Formula::ap(props_[rng_() % props_.size()]);
    }
  }

  TraceState state() {
    TraceState s;
    for (const std::string& p : props_)
      if (rng_() % 2) s.insert(p);
    return s;
  }

  std::mt19937_64 rng_;
  std::vector<std::string> props_;
};

}  // namespace speclab::testing
