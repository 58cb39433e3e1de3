#include "speclab/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "speclab/analysis.hpp"
#include "speclab/counting.hpp"
#include "speclab/errors.hpp"
#include "speclab/filters.hpp"
#include "speclab/parser.hpp"
#include "speclab/printer.hpp"
#include "speclab/search.hpp"

#ifndef SPECLAB_BUNDLED_CORPUS_DIR
#define SPECLAB_BUNDLED_CORPUS_DIR "corpus"
#endif

namespace speclab {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

Spec load_for(const CommandOptions& options, bool require_analyzable) {
  return load_spec(options.spec_path, require_analyzable, options.budget);
}

// Collects the BC list named on the command line: fixtures by name, then
// literal formulas parsed over the spec vocabulary.
std::vector<BcEntry> named_inputs(const Spec& spec,
                                  const CommandOptions& options) {
  std::vector<BcEntry> out;
  for (const std::string& name : options.fixtures) {
    const NamedFormula* fixture = spec.find_fixture(name);
    if (!fixture)
      throw SpecError("spec '" + spec.id + "' has no fixture '" + name + "'");
    out.push_back(BcEntry{fixture->id, fixture->formula, "fixture", 0});
  }
  int counter = 0;
  for (const std::string& text : options.formulas) {
    std::set<std::string> vocab(spec.vocab.begin(), spec.vocab.end());
    Formula f = parse(text, vocab);
    out.push_back(
        BcEntry{"arg-" + std::to_string(++counter), f, "argument", 0});
  }
  return out;
}

json run_record(const std::string& spec_id, const std::string& command,
                const CommandOptions& options) {
  json config;
  config["k"] = options.k;
  config["budget_states"] = options.budget.max_states;
  config["budget_secs"] =
      std::chrono::duration<double>(options.budget.time_limit).count();
  config["seed"] = options.seed;
  config["searcher"] = options.searcher;
  config["framework"] = options.framework;
  config["mode"] = options.mode;
  config["max_candidates"] = options.max_candidates;
  config["max_rounds"] = options.max_rounds;
  json out;
  out["type"] = "run";
  out["spec"] = spec_id;
  out["command"] = command;
  out["config"] = std::move(config);
  return out;
}

// Pairwise metric annotations over a final (small) BC set.
std::vector<BcAnnotations> annotate(const Spec& spec,
                                    const std::vector<BcEntry>& entries,
                                    const SolverBudget& budget) {
  const std::size_t n = entries.size();
  std::vector<BcAnnotations> out(n);
  if (n < 2) return out;
  std::vector<std::vector<bool>> wit(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> imp(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      wit[i][j] =
          is_witness(spec, entries[i].formula, entries[j].formula, budget);
      imp[i][j] = implies(entries[i].formula, entries[j].formula, budget);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (wit[i][j]) out[i].witness_of.push_back(entries[j].id);
      if (wit[j][i]) out[i].witnessed_by.push_back(entries[j].id);
      if (imp[j][i] && !imp[i][j])
        out[i].more_general_than.push_back(entries[j].id);
      if (!wit[i][j] && !wit[j][i])
        out[i].contrastive_with.push_back(entries[j].id);
    }
  return out;
}

// Emits ranked bc records (descending likelihood) and returns the rank
// order.
void emit_ranked(Report& report, const Spec& spec,
                 const std::vector<BcEntry>& entries,
                 const CommandOptions& options, bool with_annotations) {
  std::vector<LikelihoodValue> values;
  values.reserve(entries.size());
  for (const BcEntry& e : entries)
    values.push_back(likelihood(spec, e.formula, options.k, options.budget));
  std::vector<std::size_t> order = rank_by_likelihood(entries, values);
  std::vector<BcAnnotations> annotations;
  if (with_annotations) annotations = annotate(spec, entries, options.budget);
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    std::size_t i = order[rank];
    report.add(bc_record(
        spec.id, entries[i], std::nullopt, values[i],
        static_cast<int>(rank + 1),
        with_annotations ? std::optional<BcAnnotations>(annotations[i])
                         : std::nullopt));
  }
}

const char* termination_name(JfcTermination t) {
  switch (t) {
    case JfcTermination::TerminationCondition:
      return "termination-condition";
    case JfcTermination::SearcherExhausted:
      return "searcher-exhausted";
    case JfcTermination::RoundLimit:
      return "round-limit";
    case JfcTermination::Aborted:
      return "aborted";
  }
  return "aborted";
}

}  // namespace

CommandResult run_check_bc(const CommandOptions& options) {
  CommandResult result;
  auto start = Clock::now();
  Spec spec = load_for(options, true);
  std::vector<BcEntry> inputs = named_inputs(spec, options);
  if (inputs.size() != 1)
    throw SpecError("check-bc needs exactly one --fixture or --formula");

  BcVerdict verdict = check_bc(spec, inputs[0].formula, options.budget);
  json run = run_record(spec.id, "check-bc", options);
  std::ostringstream human;
  if (verdict.unknown) {
    result.exit_code = kExitUnknown;
    run["status"] = "unknown";
    human << "unknown: sub-check " << verdict.unknown_check
          << " exceeded its budget\n";
  } else {
    result.exit_code = verdict.is_bc() ? kExitOk : kExitNegative;
    run["status"] = "ok";
    human << inputs[0].id << ": " << render(inputs[0].formula) << "\n";
    human << "  inconsistency:  "
          << (verdict.inconsistency_holds ? "holds" : "fails") << "\n";
    for (const auto& entry : verdict.minimality)
      human << "  minimality(-" << entry.dropped_goal_id
            << "): " << (entry.holds ? "holds" : "fails") << "\n";
    human << "  non-triviality: "
          << (verdict.non_triviality_holds ? "holds" : "fails") << "\n";
    human << "  => " << (verdict.is_bc() ? "boundary condition"
                                         : "not a boundary condition")
          << "\n";
  }
  run["timings"] = json{{"total_ms", elapsed_ms(start)}};
  result.report.add(std::move(run));
  result.report.add(bc_record(spec.id, inputs[0], verdict, std::nullopt,
                              std::nullopt, std::nullopt));
  result.human = human.str();
  return result;
}

CommandResult run_filter(const CommandOptions& options) {
  CommandResult result;
  auto start = Clock::now();
  Spec spec = load_for(options, true);
  std::vector<BcEntry> inputs = named_inputs(spec, options);
  if (inputs.empty())
    throw SpecError("filter needs at least one --fixture or --formula");
  BcSet input_set;
  for (const BcEntry& e : inputs) input_set.insert(e);

  BcSet survivors;
  FilterTrace trace;
  if (options.mode == "generality") {
    std::tie(survivors, trace) =
        generality_filter(spec, input_set, options.budget);
  } else if (options.mode == "contrasty") {
    std::tie(survivors, trace) = ppfc(spec, input_set, options.budget);
  } else {
    throw SpecError("unknown filter mode '" + options.mode + "'");
  }

  json run = run_record(spec.id, "filter", options);
  run["status"] = "ok";
  json summary;
  summary["input"] = input_set.size();
  summary["surviving"] = survivors.size();
  run["summary"] = std::move(summary);
  run["timings"] = json{{"total_ms", elapsed_ms(start)}};
  result.report.add(std::move(run));
  emit_ranked(result.report, spec, survivors.entries(), options, true);
  append_filter_trace(result.report, spec.id, trace);

  std::ostringstream human;
  human << options.mode << " filter: " << input_set.size() << " -> "
        << survivors.size() << "\n";
  for (const BcEntry& e : survivors.entries())
    human << "  " << e.id << ": " << render(e.formula) << "\n";
  result.human = human.str();
  return result;
}

CommandResult run_identify(const CommandOptions& options) {
  CommandResult result;
  auto start = Clock::now();
  Spec spec = load_for(options, true);
  json run = run_record(spec.id, "identify", options);
  std::ostringstream human;

  if (options.framework == "ppfc") {
    auto searcher = make_searcher(options.searcher, options.seed,
                                  options.budget);
    BcSet pool;
    for (const BcEntry& e : named_inputs(spec, options)) pool.insert(e);
    std::vector<BcEntry> found =
        searcher->find_all(spec, options.max_candidates);
    for (const BcEntry& e : found) pool.insert(e);
    auto [survivors, trace] = ppfc(spec, pool, options.budget);

    run["status"] = "ok";
    json summary;
    summary["bc_total"] = pool.size();
    summary["bc_final"] = survivors.size();
    summary["termination"] = "n/a";
    summary["certified"] = true;
    run["summary"] = std::move(summary);
    run["timings"] = json{{"total_ms", elapsed_ms(start)}};
    result.report.add(std::move(run));
    emit_ranked(result.report, spec, survivors.entries(), options, true);
    append_filter_trace(result.report, spec.id, trace);
    human << "ppfc: |B| = " << pool.size() << ", |B_c| = " << survivors.size()
          << "\n";
    for (const BcEntry& e : survivors.entries())
      human << "  " << e.id << ": " << render(e.formula) << "\n";
  } else if (options.framework == "jfc") {
    auto searcher = make_searcher(options.searcher, options.seed,
                                  options.budget);
    JfcConfig config;
    config.budget = options.budget;
    config.max_rounds = options.max_rounds;
    config.likelihood_k = options.k;
    JfcResult jfc_result = jfc(spec, *searcher, config);

    run["status"] = jfc_result.certified ? "ok" : "non-certified";
    if (!jfc_result.certified) run["diagnostic"] = jfc_result.diagnostic;
    json summary;
    summary["bc_total"] = jfc_result.total_found;
    summary["bc_final"] = jfc_result.bcs.size();
    summary["termination"] = termination_name(jfc_result.termination);
    summary["rounds"] = jfc_result.rounds;
    summary["certified"] = jfc_result.certified;
    run["summary"] = std::move(summary);
    run["timings"] = json{{"total_ms", elapsed_ms(start)}};
    result.report.add(std::move(run));
    emit_ranked(result.report, spec, jfc_result.bcs.entries(), options, true);
    append_filter_trace(result.report, spec.id, jfc_result.trace);
    if (!jfc_result.certified) result.exit_code = kExitUnknown;
    human << "jfc: |B| = " << jfc_result.total_found
          << ", |B_c| = " << jfc_result.bcs.size()
          << ", termination = " << termination_name(jfc_result.termination)
          << ", rounds = " << jfc_result.rounds << "\n";
    for (const BcEntry& e : jfc_result.bcs.entries())
      human << "  " << e.id << ": " << render(e.formula) << "\n";
  } else {
    throw SpecError("unknown framework '" + options.framework + "'");
  }
  result.human = human.str();
  return result;
}

CommandResult run_likelihood(const CommandOptions& options) {
  CommandResult result;
  auto start = Clock::now();
  Spec spec = load_for(options, true);
  std::vector<BcEntry> inputs = named_inputs(spec, options);
  if (inputs.empty())
    throw SpecError("likelihood needs at least one --fixture or --formula");

  json run = run_record(spec.id, "likelihood", options);
  run["status"] = "ok";
  run["timings"] = json{{"total_ms", elapsed_ms(start)}};
  result.report.add(std::move(run));
  emit_ranked(result.report, spec, inputs, options, false);

  std::ostringstream human;
  for (const json& record : result.report.records) {
    if (record["type"] != "bc") continue;
    human << "  rank " << record["rank"] << ": " << record["id"].get<std::string>()
          << " L = " << record["likelihood"]["value"].dump() << " ("
          << record["likelihood"]["num"].get<std::string>() << "/"
          << record["likelihood"]["den"].get<std::string>() << ", k = "
          << record["likelihood"]["k"] << ")\n";
  }
  result.human = human.str();
  return result;
}

CommandResult run_report(const CommandOptions& options) {
  CommandResult result;
  auto start = Clock::now();
  Spec spec = load_for(options, false);

  json run = run_record(spec.id, "report", options);
  run["status"] = "ok";
  json summary;
  summary["dom"] = spec.dom.size();
  summary["goals"] = spec.goals.size();
  summary["vars"] = spec.vocab.size();
  int total_size = 0;
  for (const auto& d : spec.dom) total_size += d.formula.size();
  for (const auto& g : spec.goals) total_size += g.formula.size();
  summary["size"] = total_size;
  summary["fixtures"] = spec.fixtures.size();
  summary["analyzable"] = spec.goals.size() >= 2;
  run["summary"] = std::move(summary);
  run["timings"] = json{{"total_ms", elapsed_ms(start)}};
  result.report.add(std::move(run));

  std::ostringstream human;
  human << "spec " << spec.id << ": |Dom| = " << spec.dom.size()
        << ", |G| = " << spec.goals.size() << ", |vocab| = "
        << spec.vocab.size() << ", size = " << total_size << "\n";
  for (const auto& d : spec.dom)
    human << "  dom " << d.id << ": " << render(d.formula) << "\n";
  for (const auto& g : spec.goals)
    human << "  goal " << g.id << ": " << render(g.formula) << "\n";
  for (const auto& f : spec.fixtures)
    human << "  fixture " << f.id << ": " << render(f.formula) << "\n";
  result.human = human.str();
  return result;
}

std::string corpus_dir() {
  if (const char* env = std::getenv("SPECLAB_CORPUS_DIR"); env && *env)
    return env;
  return SPECLAB_BUNDLED_CORPUS_DIR;
}

std::string corpus_spec_path(const std::string& name) {
  return corpus_dir() + "/" + name + ".spec";
}

}  // namespace speclab
