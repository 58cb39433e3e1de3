#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "speclab/bcset.hpp"
#include "speclab/search.hpp"
#include "speclab/spec.hpp"

namespace speclab {

enum class FilterAction { KeepBoth, DropSubject, DropOther, KeepSmaller };

struct FilterDecision {
  std::string subject;
  std::string other;
  bool subject_witnesses_other = false;
  bool other_witnesses_subject = false;
  FilterAction action = FilterAction::KeepBoth;
};

struct DropRecord {
  std::string id;
  std::string removed_by;
  std::string reason;
};

// Audit log of filter decisions.  Every dropped id appears in exactly one
// drop record.
struct FilterTrace {
  std::vector<FilterDecision> decisions;
  std::vector<DropRecord> drops;
};

// One pass of the external contrasty filter: mirrors its reference control
// flow exactly, including the early (false, empty-W) return that discards
// the W accumulated so far.  Mutual witnesses keep the smaller formula
// (ties: lexicographically smaller rendering).  `others` is scanned in
// order.  Throws FilterAbortedError when a witness check is Unknown.
std::pair<bool, BcSet> external_contrasty_filter(const Spec& spec,
                                                 const BcEntry& phi,
                                                 const BcSet& others,
                                                 const SolverBudget& budget,
                                                 FilterTrace* trace = nullptr);

// Post-processing framework: filters a verified BC set down to a pairwise
// contrastive one.  Entries are re-verified with check_bc on entry; a non-BC
// input is a SpecError.  Candidates are visited in a snapshot order of
// ascending size then id, so the result is input-order independent.
std::pair<BcSet, FilterTrace> ppfc(const Spec& spec, const BcSet& input,
                                   const SolverBudget& budget = {});

// W = { psi in bc | phi is a witness of psi }, evaluated on the original
// spec.
BcSet internal_contrasty_filter(const Spec& spec, const Formula& phi,
                                const BcSet& bc, const SolverBudget& budget,
                                FilterTrace* trace = nullptr,
                                const std::string& phi_id = "");

enum class JfcTermination {
  TerminationCondition,
  SearcherExhausted,
  RoundLimit,
  Aborted,  // a sub-check came back Unknown; result is non-certified
};

struct JfcConfig {
  SolverBudget budget;
  std::size_t max_rounds = 25;
  unsigned likelihood_k = 20;
  // Off by default: the reference control flow only tests the termination
  // condition after accepting a BC.
  bool check_termination_on_entry = false;
};

struct JfcResult {
  BcSet bcs;
  JfcTermination termination = JfcTermination::SearcherExhausted;
  FilterTrace trace;
  std::size_t rounds = 0;
  std::size_t total_found = 0;  // every BC the searcher produced
  bool certified = true;        // false after an Unknown-triggered abort
  std::string diagnostic;
  // Per accepted BC, whether no current member witnessed it at
  // acceptance time (checked on the original spec).
  std::vector<std::pair<std::string, bool>> accept_unwitnessed;
};

// Joint framework: searcher runs on Dom plus negations of the current
// contrastive set; accepted BCs displace the members they witness; stops on
// the no-BC certificate, searcher exhaustion, or the round cap.  Witness
// checks use the original spec throughout.  An Unknown verdict anywhere
// aborts the loop and the partial result comes back marked non-certified.
JfcResult jfc(const Spec& spec, BcSearcher& searcher, const JfcConfig& config);

// Generality filter: keeps the maximal elements of the implication order,
// dropping every BC implied by a strictly more general retained one.
std::pair<BcSet, FilterTrace> generality_filter(const Spec& spec,
                                                const BcSet& input,
                                                const SolverBudget& budget = {});

}  // namespace speclab
