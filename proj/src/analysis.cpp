#include "speclab/analysis.hpp"

#include <stdexcept>

#include "speclab/errors.hpp"
#include "speclab/solver.hpp"

namespace speclab {

bool BcVerdict::minimality_holds() const {
  for (const auto& entry : minimality)
    if (!entry.holds) return false;
  return true;
}

bool BcVerdict::is_bc() const {
  if (unknown)
    throw std::logic_error("is_bc() queried on an Unknown verdict");
  return inconsistency_holds && minimality_holds() && non_triviality_holds;
}

std::optional<BcFailure> BcVerdict::failure_reason() const {
  if (unknown) return std::nullopt;
  if (!inconsistency_holds) return BcFailure::Inconsistency;
  if (!minimality_holds()) return BcFailure::Minimality;
  if (!non_triviality_holds) return BcFailure::Triviality;
  return std::nullopt;
}

std::optional<std::size_t> BcVerdict::failing_goal() const {
  if (failure_reason() != BcFailure::Minimality) return std::nullopt;
  for (std::size_t i = 0; i < minimality.size(); ++i)
    if (!minimality[i].holds) return i;
  return std::nullopt;
}

BcVerdict check_bc(const Spec& spec, const Formula& phi,
                   const SolverBudget& budget) {
  if (spec.goals.size() < 2)
    throw SpecError("BC analysis requires at least 2 goals; spec '" +
                    spec.id + "' has " + std::to_string(spec.goals.size()));
  BcVerdict verdict;
  Formula dom = spec.dom_conjunction();
  Formula goals = spec.goal_conjunction();

  try {
    verdict.inconsistency_holds =
        !is_sat(Formula::And(Formula::And(dom, goals), phi), budget,
                spec.vocab)
             .sat();
  } catch (const BudgetExceededError&) {
    verdict.unknown = true;
    verdict.unknown_check = "inconsistency";
    return verdict;
  }

  for (std::size_t i = 0; i < spec.goals.size(); ++i) {
    MinimalityEntry entry;
    entry.dropped_goal_id = spec.goals[i].id;
    try {
      SatResult r =
          is_sat(Formula::And(Formula::And(dom, spec.goals_except(i)), phi),
                 budget, spec.vocab);
      entry.holds = r.sat();
      entry.witness = r.witness;
    } catch (const BudgetExceededError&) {
      verdict.unknown = true;
      verdict.unknown_check = "minimality:" + spec.goals[i].id;
      return verdict;
    }
    verdict.minimality.push_back(std::move(entry));
  }

  try {
    Formula neg_goals = Formula::Not(goals);
    bool equivalent = implies(phi, neg_goals, budget) &&
                      implies(neg_goals, phi, budget);
    verdict.non_triviality_holds = !equivalent;
  } catch (const BudgetExceededError&) {
    verdict.unknown = true;
    verdict.unknown_check = "non-triviality";
    return verdict;
  }
  return verdict;
}

bool is_more_general(const Formula& a, const Formula& b,
                     const SolverBudget& budget) {
  return implies(b, a, budget);
}

bool is_witness(const Spec& spec, const Formula& f, const Formula& phi,
                const SolverBudget& budget) {
  BcVerdict verdict =
      check_bc(spec, Formula::And(phi, Formula::Not(f)), budget);
  if (verdict.unknown)
    throw BudgetExceededError(
        "witness check unknown (sub-check " + verdict.unknown_check + ")",
        SolverStats{});
  return !verdict.is_bc();
}

bool are_contrastive(const Spec& spec, const Formula& a, const Formula& b,
                     const SolverBudget& budget) {
  if (a == b)
    throw SpecError("contrasty is defined for structurally distinct BCs");
  return !is_witness(spec, a, b, budget) && !is_witness(spec, b, a, budget);
}

int LikelihoodValue::compare(const LikelihoodValue& o) const {
  BigInt lhs = numerator * o.denominator;
  BigInt rhs = o.numerator * denominator;
  return lhs.compare(rhs);
}

LikelihoodValue likelihood(const Spec& spec, const Formula& phi, unsigned k,
                           const SolverBudget& budget,
                           std::uint64_t alphabet_cap) {
  std::vector<Formula> dom_constraints;
  for (const auto& d : spec.dom) dom_constraints.push_back(d.formula);

  CountResult den =
      count_prefixes(dom_constraints, spec.vocab, k, budget, alphabet_cap);
  if (den.count.is_zero())
    throw DomUnsatError("likelihood undefined: #(Dom, " + std::to_string(k) +
                        ") = 0 (Dom unsatisfiable)");
  std::vector<Formula> num_constraints = dom_constraints;
  num_constraints.push_back(phi);
  CountResult num =
      count_prefixes(num_constraints, spec.vocab, k, budget, alphabet_cap);

  LikelihoodValue out;
  out.numerator = num.count;
  out.denominator = den.count;
  out.k = k;
  return out;
}

std::optional<std::size_t> termination_condition(const Spec& spec,
                                                 const SolverBudget& budget) {
  Formula dom = spec.dom_conjunction();
  for (std::size_t i = 0; i < spec.goals.size(); ++i) {
    Formula query = Formula::And(Formula::And(dom, spec.goals_except(i)),
                                 Formula::Not(spec.goals[i].formula));
    if (!is_sat(query, budget, spec.vocab).sat()) return i;
  }
  return std::nullopt;
}

Formula avoid_pattern(const Spec& spec, const Formula& b) {
  return Formula::G(
      Formula::Implies(spec.dom_conjunction(), Formula::G(Formula::Not(b))));
}

}  // namespace speclab
