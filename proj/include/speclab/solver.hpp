#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "speclab/errors.hpp"
#include "speclab/formula.hpp"
#include "speclab/trace.hpp"

namespace speclab {

struct SolverBudget {
  std::size_t max_states = 200000;
  std::chrono::milliseconds time_limit = std::chrono::seconds(30);
};

enum class SatStatus { Sat, Unsat };

struct SatResult {
  SatStatus status = SatStatus::Unsat;
  std::optional<LassoTrace> witness;  // present iff Sat; verified by eval
  SolverStats stats;
  bool sat() const { return status == SatStatus::Sat; }
};

// Decides satisfiability by an on-the-fly tableau: states are locally
// consistent subformula obligation sets of nnf(f), acceptance requires every
// Until obligation to be fulfilled; Sat iff a reachable accepting lasso
// exists, and the returned witness satisfies f under eval.
//
// `vocab` fixes the proposition universe of the witness states; when empty it
// defaults to the atoms of f.  Throws BudgetExceededError when the state or
// time budget runs out.
SatResult is_sat(const Formula& f, const SolverBudget& budget = {},
                 const std::vector<std::string>& vocab = {});

// True iff f && !g is unsatisfiable.
bool implies(const Formula& f, const Formula& g,
             const SolverBudget& budget = {});

enum class OracleStatus { Sat, UnsatWithinBounds };

// Exhaustive lasso enumeration, reported distinctly from true Unsat.
struct OracleResult {
  OracleStatus status = OracleStatus::UnsatWithinBounds;
  std::optional<LassoTrace> witness;
  bool sat() const { return status == OracleStatus::Sat; }
};

// Independent brute-force oracle: enumerates every lasso trace with
// prefix length <= prefix_bound and 1 <= loop length <= loop_bound over the
// given vocabulary (defaults to atoms of f) and evaluates f on each.
// Intended for small instances (<= 4 propositions, bounds <= 4).
OracleResult brute_force_oracle(const Formula& f, std::size_t prefix_bound,
                                std::size_t loop_bound,
                                const std::vector<std::string>& vocab = {});

}  // namespace speclab
