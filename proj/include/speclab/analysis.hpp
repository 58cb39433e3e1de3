#pragma once

#include <optional>
#include <string>
#include <vector>

#include "speclab/bigint.hpp"
#include "speclab/counting.hpp"
#include "speclab/formula.hpp"
#include "speclab/spec.hpp"
#include "speclab/trace.hpp"

namespace speclab {

enum class BcFailure { Inconsistency, Minimality, Triviality };

struct MinimalityEntry {
  std::string dropped_goal_id;
  bool holds = false;
  // Trace satisfying Dom && G_{-i} && phi when the entry holds.
  std::optional<LassoTrace> witness;
};

// Outcome of the three boundary-condition checks.  All are evaluated (no
// short-circuit) unless a sub-query exhausts its budget, in which case the
// verdict is Unknown and carries the name of the timed-out sub-check;
// Unknown verdicts must never be coerced to booleans.
struct BcVerdict {
  bool unknown = false;
  std::string unknown_check;

  bool inconsistency_holds = false;
  std::vector<MinimalityEntry> minimality;
  bool non_triviality_holds = false;

  bool minimality_holds() const;
  bool is_bc() const;
  std::optional<BcFailure> failure_reason() const;
  // Index of the first failing minimality entry, if that is the reason.
  std::optional<std::size_t> failing_goal() const;
};

// The boundary-condition judgment: logical inconsistency (Dom && G &&
// phi unsat), minimality
// (Dom && G_{-i} && phi sat for every i), non-triviality (phi not
// semantically equivalent to !G, goals only).
BcVerdict check_bc(const Spec& spec, const Formula& phi,
                   const SolverBudget& budget = {});

// Generality: a is more general than b iff b implies a.
bool is_more_general(const Formula& a, const Formula& b,
                     const SolverBudget& budget = {});

// f is a witness of phi iff phi && !f is not a BC.
// Throws BudgetExceededError instead of guessing on Unknown.
bool is_witness(const Spec& spec, const Formula& f, const Formula& phi,
                const SolverBudget& budget = {});

// Contrasty: mutual non-witness.  Requires a != b structurally.
bool are_contrastive(const Spec& spec, const Formula& a, const Formula& b,
                     const SolverBudget& budget = {});

struct LikelihoodValue {
  BigInt numerator;
  BigInt denominator;
  unsigned k = 0;
  std::string interpretation = "prefix-extendable";
  double value() const { return BigInt::ratio(numerator, denominator); }
  // Exact comparison via cross-multiplication.
  int compare(const LikelihoodValue& o) const;
};

// Likelihood L(phi) = #(Dom u {phi}, k) / #(Dom, k) over the spec
// vocabulary.
// Throws DomUnsatError when the denominator is zero.
LikelihoodValue likelihood(const Spec& spec, const Formula& phi, unsigned k,
                           const SolverBudget& budget = {},
                           std::uint64_t alphabet_cap = kDefaultAlphabetCap);

// Sufficient no-BC condition: first i with Dom && G_{-i} && !g_i unsat, if
// any.  A returned index certifies that no BC exists under the spec.
std::optional<std::size_t> termination_condition(
    const Spec& spec, const SolverBudget& budget = {});

// Resolution template G(Dom -> G !b).
Formula avoid_pattern(const Spec& spec, const Formula& b);

}  // namespace speclab
