#pragma once

// Internal tableau state graph shared by the satisfiability and counting
// engines.  Not installed.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "speclab/formula.hpp"
#include "speclab/solver.hpp"

namespace speclab::detail {

// Conjunction of literals over an indexed vocabulary (<= 64 propositions).
struct Cube {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;

  bool conflicts() const { return (pos & neg) != 0; }
  bool admits_letter(std::uint64_t letter) const {
    return (letter & pos) == pos && (letter & neg) == 0;
  }
};

struct Move {
  Cube lits;
  std::uint32_t target = 0;
  // Bitmask over the graph's until index: obligations deferred to the next
  // state instead of being fulfilled now.
  std::uint64_t deferred = 0;
};

struct StateGraph {
  std::vector<std::string> vocab;  // index order defines Cube bits
  // Node obligations, canonical (sorted by formula id).
  std::vector<std::vector<const FormulaNode*>> nodes;
  std::vector<std::vector<Move>> moves;
  // Until subformulas of the closure, in first-seen order; index is the
  // acceptance-set index used by Move::deferred.
  std::vector<const FormulaNode*> untils;
  std::uint32_t initial = 0;
  SolverStats stats;
};

// Builds the reachable state graph of an NNF formula.  Throws
// BudgetExceededError when budget.max_states or budget.time_limit is hit and
// SpecError if an atom falls outside `vocab`.
StateGraph build_state_graph(const Formula& nnf_formula,
                             const std::vector<std::string>& vocab,
                             const SolverBudget& budget);

// Strongly connected components in deterministic order; each entry holds the
// member node ids.  `accepting[i]` marks components that contain an internal
// move and fulfil every until acceptance set.
struct SccAnalysis {
  std::vector<std::vector<std::uint32_t>> components;
  std::vector<bool> accepting;
  std::vector<std::uint32_t> component_of;  // node id -> component index
};

SccAnalysis analyze_sccs(const StateGraph& graph);

// Nodes from which some accepting component is reachable.
std::vector<bool> live_nodes(const StateGraph& graph, const SccAnalysis& sccs);

}  // namespace speclab::detail
