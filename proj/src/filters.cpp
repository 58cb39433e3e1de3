#include "speclab/filters.hpp"

#include <algorithm>

#include "speclab/analysis.hpp"
#include "speclab/errors.hpp"
#include "speclab/printer.hpp"

namespace speclab {
namespace {

// Snapshot order of the filtering passes: ascending size, ties by id.
std::vector<BcEntry> size_ordered(const BcSet& set) {
  std::vector<BcEntry> out = set.entries();
  std::stable_sort(out.begin(), out.end(),
                   [](const BcEntry& a, const BcEntry& b) {
                     int sa = a.formula.size();
                     int sb = b.formula.size();
                     return sa != sb ? sa < sb : a.id < b.id;
                   });
  return out;
}

void verify_all_bcs(const Spec& spec, const BcSet& input,
                    const SolverBudget& budget) {
  for (const BcEntry& e : input.entries()) {
    BcVerdict v = check_bc(spec, e.formula, budget);
    if (v.unknown)
      throw FilterAbortedError("verification of '" + e.id +
                               "' unknown (sub-check " + v.unknown_check +
                               ")");
    if (!v.is_bc())
      throw SpecError("'" + e.id + "' (" + render(e.formula) +
                      ") is not a boundary condition of spec '" + spec.id +
                      "'");
  }
}

bool witness_or_abort(const Spec& spec, const Formula& f, const Formula& phi,
                      const SolverBudget& budget, const std::string& f_id,
                      const std::string& phi_id) {
  try {
    return is_witness(spec, f, phi, budget);
  } catch (const BudgetExceededError& e) {
    throw FilterAbortedError("witness check " + f_id + " of " + phi_id +
                             " aborted: " + e.what());
  }
}

}  // namespace

std::pair<bool, BcSet> external_contrasty_filter(const Spec& spec,
                                                 const BcEntry& phi,
                                                 const BcSet& others,
                                                 const SolverBudget& budget,
                                                 FilterTrace* trace) {
  BcSet w;
  for (const BcEntry& psi : others.entries()) {
    bool phi_wit_psi =
        witness_or_abort(spec, phi.formula, psi.formula, budget, phi.id,
                         psi.id);
    bool psi_wit_phi =
        witness_or_abort(spec, psi.formula, phi.formula, budget, psi.id,
                         phi.id);
    FilterDecision decision{phi.id, psi.id, phi_wit_psi, psi_wit_phi,
                            FilterAction::KeepBoth};
    if (phi_wit_psi && psi_wit_phi) {
      // Same divergence: the smaller formula stays.
      int s_phi = phi.formula.size();
      int s_psi = psi.formula.size();
      bool phi_larger =
          s_phi != s_psi ? s_phi > s_psi
                         : render(phi.formula) > render(psi.formula);
      if (phi_larger) {
        decision.action = FilterAction::DropSubject;
        if (trace) trace->decisions.push_back(decision);
        return {false, BcSet{}};
      }
      decision.action = FilterAction::KeepSmaller;
      if (trace) trace->decisions.push_back(decision);
      w.insert(psi);
      continue;
    }
    if (phi_wit_psi) {
      decision.action = FilterAction::DropOther;
      if (trace) trace->decisions.push_back(decision);
      w.insert(psi);
      continue;
    }
    if (psi_wit_phi) {
      decision.action = FilterAction::DropSubject;
      if (trace) trace->decisions.push_back(decision);
      return {false, BcSet{}};
    }
    if (trace) trace->decisions.push_back(decision);
  }
  return {true, w};
}

std::pair<BcSet, FilterTrace> ppfc(const Spec& spec, const BcSet& input,
                                   const SolverBudget& budget) {
  verify_all_bcs(spec, input, budget);
  FilterTrace trace;
  std::vector<BcEntry> snapshot = size_ordered(input);

  BcSet active;
  for (const BcEntry& e : snapshot) active.insert(e);

  for (const BcEntry& subject : snapshot) {
    if (!active.contains_id(subject.id)) continue;
    BcSet rest;
    for (const BcEntry& e : size_ordered(active))
      if (e.id != subject.id) rest.insert(e);
    auto [contrastive, w] =
        external_contrasty_filter(spec, subject, rest, budget, &trace);
    if (contrastive) {
      for (const BcEntry& dropped : w.entries()) {
        active.erase(dropped.id);
        trace.drops.push_back(
            DropRecord{dropped.id, subject.id, "witnessed-by-subject"});
      }
    } else {
      active.erase(subject.id);
      trace.drops.push_back(
          DropRecord{subject.id, "", "filtered-against-rest"});
    }
  }

  BcSet result;
  for (const BcEntry& e : size_ordered(active)) result.insert(e);
  return {result, trace};
}

BcSet internal_contrasty_filter(const Spec& spec, const Formula& phi,
                                const BcSet& bc, const SolverBudget& budget,
                                FilterTrace* trace,
                                const std::string& phi_id) {
  BcSet w;
  for (const BcEntry& psi : bc.entries()) {
    bool wit = witness_or_abort(spec, phi, psi.formula, budget, phi_id,
                                psi.id);
    if (trace)
      trace->decisions.push_back(FilterDecision{
          phi_id, psi.id, wit, false,
          wit ? FilterAction::DropOther : FilterAction::KeepBoth});
    if (wit) w.insert(psi);
  }
  return w;
}

JfcResult jfc(const Spec& spec, BcSearcher& searcher, const JfcConfig& config) {
  JfcResult result;
  auto augmented = [&]() {
    std::vector<std::pair<std::string, Formula>> negations;
    for (const BcEntry& e : result.bcs.entries())
      negations.push_back({e.id, e.formula});
    return spec.with_negated_constraints(negations);
  };
  auto abort = [&](const std::string& why) {
    result.termination = JfcTermination::Aborted;
    result.certified = false;
    result.diagnostic = why;
    return result;
  };

  try {
    if (config.check_termination_on_entry &&
        termination_condition(spec, config.budget))
      return result;  // SearcherExhausted-equivalent: nothing to search for

    while (true) {
      if (result.rounds >= config.max_rounds) {
        result.termination = JfcTermination::RoundLimit;
        return result;
      }
      ++result.rounds;
      Spec current = augmented();
      std::optional<BcEntry> candidate = searcher.find_one(current);
      if (!candidate) {
        result.termination = JfcTermination::SearcherExhausted;
        return result;
      }
      ++result.total_found;

      // A BC under the augmented Dom is a BC under the original one; verify
      // against the augmented spec the searcher saw.
      BcVerdict verdict = check_bc(current, candidate->formula, config.budget);
      if (verdict.unknown)
        return abort("candidate '" + candidate->id +
                     "' verification unknown (sub-check " +
                     verdict.unknown_check + ")");
      if (!verdict.is_bc())
        throw SpecError("searcher '" + searcher.name() +
                        "' returned a non-BC candidate '" + candidate->id +
                        "'");

      // Record whether any current member witnesses the newcomer; the
      // augmentation should make that impossible.
      bool unwitnessed = true;
      for (const BcEntry& member : result.bcs.entries())
        if (witness_or_abort(spec, member.formula, candidate->formula,
                             config.budget, member.id, candidate->id))
          unwitnessed = false;
      result.accept_unwitnessed.push_back({candidate->id, unwitnessed});

      BcSet w = internal_contrasty_filter(spec, candidate->formula,
                                          result.bcs, config.budget,
                                          &result.trace, candidate->id);
      for (const BcEntry& dropped : w.entries()) {
        result.bcs.erase(dropped.id);
        result.trace.drops.push_back(
            DropRecord{dropped.id, candidate->id, "witnessed-by-new-bc"});
      }
      candidate->iteration = static_cast<int>(result.rounds);
      result.bcs.insert(*candidate);

      if (termination_condition(augmented(), config.budget)) {
        result.termination = JfcTermination::TerminationCondition;
        return result;
      }
    }
  } catch (const BudgetExceededError& e) {
    return abort(std::string("budget exceeded: ") + e.what());
  } catch (const FilterAbortedError& e) {
    return abort(e.what());
  }
}

std::pair<BcSet, FilterTrace> generality_filter(const Spec& spec,
                                                const BcSet& input,
                                                const SolverBudget& budget) {
  verify_all_bcs(spec, input, budget);
  FilterTrace trace;
  std::vector<BcEntry> snapshot = size_ordered(input);
  std::vector<bool> dropped(snapshot.size(), false);

  // implied[i][j]: snapshot[i] implies snapshot[j], i.e. j is at least as
  // general as i.
  const std::size_t n = snapshot.size();
  std::vector<std::vector<bool>> implied(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      try {
        implied[i][j] =
            implies(snapshot[i].formula, snapshot[j].formula, budget);
      } catch (const BudgetExceededError& e) {
        throw FilterAbortedError(std::string("generality check aborted: ") +
                                 e.what());
      }
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || dropped[i] || dropped[j]) continue;
      // j strictly more general than i, and retained: drop i.
      if (implied[i][j] && !implied[j][i]) {
        dropped[i] = true;
        trace.decisions.push_back(FilterDecision{
            snapshot[i].id, snapshot[j].id, false, false,
            FilterAction::DropSubject});
        trace.drops.push_back(DropRecord{snapshot[i].id, snapshot[j].id,
                                         "less-general"});
      }
    }

  BcSet result;
  for (std::size_t i = 0; i < n; ++i)
    if (!dropped[i]) result.insert(snapshot[i]);
  return {result, trace};
}

}  // namespace speclab
