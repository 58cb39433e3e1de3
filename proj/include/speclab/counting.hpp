#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "speclab/bigint.hpp"
#include "speclab/formula.hpp"
#include "speclab/solver.hpp"

namespace speclab {

struct CountResult {
  unsigned k = 0;
  BigInt count;
  std::uint64_t alphabet_size = 0;  // 2^|vocab|
};

// Default alphabet cap: 2^12 symbols.
inline constexpr std::uint64_t kDefaultAlphabetCap = 4096;

// Number of length-k words u over 2^vocab that extend to some infinite word
// satisfying the conjunction of `constraints` (u is the length-k base of at
// least one model).  Implemented by pruning tableau states that cannot reach
// an accepting lasso and then counting words of the pruned automaton through
// an on-demand subset construction, so each word is counted exactly once.
//
// Throws VocabularyTooLargeError when 2^|vocab| exceeds `alphabet_cap`,
// SpecError for k = 0 or constraints mentioning atoms outside `vocab`, and
// propagates BudgetExceededError.
CountResult count_prefixes(const std::vector<Formula>& constraints,
                           const std::vector<std::string>& vocab, unsigned k,
                           const SolverBudget& budget = {},
                           std::uint64_t alphabet_cap = kDefaultAlphabetCap);

}  // namespace speclab
