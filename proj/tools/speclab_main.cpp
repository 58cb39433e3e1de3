#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "speclab/commands.hpp"
#include "speclab/errors.hpp"

namespace {

void add_common_flags(CLI::App* cmd, speclab::CommandOptions& options,
                      double& budget_secs, std::string& out_path) {
  cmd->add_option("spec", options.spec_path, "Spec file path")->required();
  cmd->add_option("--out", out_path, "Write report records to this file");
  cmd->add_option("--k", options.k, "Trace length for likelihood counting");
  cmd->add_option("--budget-states", options.budget.max_states,
                  "Solver state budget per query");
  cmd->add_option("--budget-secs", budget_secs,
                  "Solver time budget per query, seconds");
  cmd->add_option("--seed", options.seed, "Random seed (genetic searcher)");
  cmd->add_option("--fixture", options.fixtures,
                  "Named fixture from the spec file (repeatable)");
  cmd->add_option("--formula", options.formulas,
                  "Formula in concrete syntax (repeatable)");
}

int emit(const speclab::CommandResult& result, const std::string& out_path) {
  std::cout << result.human;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return speclab::kExitUsage;
    }
    out << result.report.to_jsonl();
  } else {
    std::cout << result.report.to_jsonl();
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"speclab: boundary-condition analysis for LTL goal models"};
  app.require_subcommand(1);

  speclab::CommandOptions options;
  double budget_secs = 30.0;
  std::string out_path;

  CLI::App* check = app.add_subcommand(
      "check-bc", "Check the three boundary-condition properties");
  add_common_flags(check, options, budget_secs, out_path);

  CLI::App* filter =
      app.add_subcommand("filter", "Filter a BC list (generality | contrasty)");
  add_common_flags(filter, options, budget_secs, out_path);
  filter->add_option("--mode", options.mode, "generality or contrasty");

  CLI::App* identify =
      app.add_subcommand("identify", "Search for BCs and filter (ppfc | jfc)");
  add_common_flags(identify, options, budget_secs, out_path);
  identify->add_option("--framework", options.framework, "ppfc or jfc");
  identify->add_option("--searcher", options.searcher, "pattern or genetic");
  identify->add_option("--max-candidates", options.max_candidates,
                       "BC cap for the search phase (ppfc)");
  identify->add_option("--max-rounds", options.max_rounds,
                       "Round cap for jfc");

  CLI::App* likelihood =
      app.add_subcommand("likelihood", "Rank BCs by model-counting likelihood");
  add_common_flags(likelihood, options, budget_secs, out_path);

  CLI::App* report =
      app.add_subcommand("report", "Summarize a spec file");
  add_common_flags(report, options, budget_secs, out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : speclab::kExitUsage;
  }

  options.budget.time_limit = std::chrono::milliseconds(
      static_cast<long long>(budget_secs * 1000.0));

  try {
    speclab::CommandResult result;
    if (check->parsed()) result = speclab::run_check_bc(options);
    if (filter->parsed()) result = speclab::run_filter(options);
    if (identify->parsed()) result = speclab::run_identify(options);
    if (likelihood->parsed()) result = speclab::run_likelihood(options);
    if (report->parsed()) result = speclab::run_report(options);
    return emit(result, out_path);
  } catch (const speclab::BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return speclab::kExitUnknown;
  } catch (const speclab::FilterAbortedError& e) {
    std::cerr << "aborted (non-certified): " << e.what() << "\n";
    return speclab::kExitUnknown;
  } catch (const speclab::VocabularyTooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return speclab::kExitUsage;
  } catch (const speclab::DomUnsatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return speclab::kExitUsage;
  } catch (const speclab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return speclab::kExitUsage;
  }
}
