#pragma once

#include <optional>
#include <string>
#include <vector>

#include "speclab/formula.hpp"
#include "speclab/solver.hpp"

namespace speclab {

struct NamedFormula {
  std::string id;  // stable identifier; doubles as the human name
  std::string description;
  Formula formula;
};

// A goal specification: domain properties Dom and goals G over a shared
// proposition vocabulary, plus optional named candidate-BC fixtures.
struct Spec {
  std::string id;
  std::vector<std::string> vocab;  // declaration order
  std::vector<NamedFormula> dom;
  std::vector<NamedFormula> goals;
  std::vector<NamedFormula> fixtures;

  Formula dom_conjunction() const;
  // G = g_1 && ... && g_n.
  Formula goal_conjunction() const;
  // G_{-i}: all goals except index i.
  Formula goals_except(std::size_t i) const;
  // Dom && G.
  Formula full_conjunction() const;

  const NamedFormula* find_fixture(const std::string& id) const;

  // Returns a copy whose Dom carries !phi for each given formula, the JFc
  // augmentation.
  Spec with_negated_constraints(
      const std::vector<std::pair<std::string, Formula>>& bcs) const;
};

// Parses the spec-file format: '#' comments, `props p q r`,
// `dom <name>: <formula>`, `goal <name>: <formula>`,
// `fixture <name>: <formula>`.  All formulas must parse over the declared
// vocabulary.  When `require_analyzable` is set (the default) the spec also
// needs at least two goals, the precondition of every BC operation.
// Dom && G satisfiability is checked and a violation is a hard SpecError.
Spec parse_spec_text(const std::string& text, const std::string& id,
                     bool require_analyzable = true,
                     const SolverBudget& budget = {});

Spec load_spec(const std::string& path, bool require_analyzable = true,
               const SolverBudget& budget = {});

}  // namespace speclab
