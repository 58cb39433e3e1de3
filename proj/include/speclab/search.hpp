#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "speclab/bcset.hpp"
#include "speclab/spec.hpp"

namespace speclab {

// Searcher handle invoked by the identification frameworks.  Implementations
// verify candidates with check_bc on the (possibly augmented) spec they are
// handed, so every returned entry is a BC of that spec.
class BcSearcher {
 public:
  virtual ~BcSearcher() = default;
  virtual std::string name() const = 0;
  // First BC for this spec, or nullopt when the search space is exhausted.
  virtual std::optional<BcEntry> find_one(const Spec& spec) = 0;
  // Up to max_candidates BCs in yield order.
  virtual std::vector<BcEntry> find_all(const Spec& spec,
                                        std::size_t max_candidates) = 0;
};

// Deterministic enumerator of scenario-shaped candidates over cubes of at
// most three literals.  Families, in order:
//   1. negated G-guarded step rules  F(l1 && (l2 || X l3))
//   2. state cubes                   c
//   3. next cubes                    X c
//   4. eventual cubes                F c
//   5. two-step scenarios            F(c1 && X c2)
//   6. invariant scenarios           G c, F(G c)
// Within a family candidates come by increasing size, then enumeration
// order.  The goal-violation family leads because a BC of that shape covers
// a whole single-goal-violation region, which is what lets JFc certify
// termination after one round on conflict-of-two-rules specs.
class PatternSearcher : public BcSearcher {
 public:
  explicit PatternSearcher(SolverBudget budget = {});
  std::string name() const override { return "pattern"; }
  std::optional<BcEntry> find_one(const Spec& spec) override;
  std::vector<BcEntry> find_all(const Spec& spec,
                                std::size_t max_candidates) override;

  // Raw candidate stream, unverified; exposed for tests.
  std::vector<Formula> candidates(const Spec& spec,
                                  std::size_t limit = SIZE_MAX) const;

 private:
  SolverBudget budget_;
};

struct GaConfig {
  std::uint64_t seed = 1;
  std::size_t population = 100;
  std::size_t generations = 50;
  double mutation_rate = 0.2;
  double crossover_rate = 0.7;
  std::size_t elite = 10;
  std::size_t tournament = 3;
  int max_formula_size = 40;
};

// Stochastic searcher: population seeded from subformulas of Dom/G and their
// negations, subtree-exchange crossover, node replace/insert/delete
// mutation, fitness = number of BC conditions satisfied with smaller
// size as tie-break.  Reproducible for a fixed seed.
class GeneticSearcher : public BcSearcher {
 public:
  explicit GeneticSearcher(GaConfig config = {}, SolverBudget budget = {});
  std::string name() const override { return "genetic"; }
  std::optional<BcEntry> find_one(const Spec& spec) override;
  std::vector<BcEntry> find_all(const Spec& spec,
                                std::size_t max_candidates) override;

 private:
  GaConfig config_;
  SolverBudget budget_;
};

std::unique_ptr<BcSearcher> make_searcher(const std::string& name,
                                          std::uint64_t seed,
                                          const SolverBudget& budget);

}  // namespace speclab
