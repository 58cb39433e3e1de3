#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "speclab/report.hpp"
#include "speclab/solver.hpp"

namespace speclab {

// Exit codes: 0 success/affirmative, 1 negative verdict, 2 usage error,
// 3 budget exhausted / Unknown.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnknown = 3;

struct CommandOptions {
  std::string spec_path;
  std::vector<std::string> fixtures;  // --fixture, repeatable
  std::vector<std::string> formulas;  // --formula, repeatable
  unsigned k = 20;
  SolverBudget budget;
  std::uint64_t seed = 1;
  std::string searcher = "pattern";
  std::string framework = "ppfc";
  std::string mode = "contrasty";  // filter mode: generality | contrasty
  std::size_t max_candidates = 24;
  std::size_t max_rounds = 25;
};

struct CommandResult {
  int exit_code = kExitOk;
  Report report;
  std::string human;  // printable summary
};

CommandResult run_check_bc(const CommandOptions& options);
CommandResult run_filter(const CommandOptions& options);
CommandResult run_identify(const CommandOptions& options);
CommandResult run_likelihood(const CommandOptions& options);
CommandResult run_report(const CommandOptions& options);

// Resolves the corpus directory: $SPECLAB_CORPUS_DIR, else the build-time
// bundled location.
std::string corpus_dir();
std::string corpus_spec_path(const std::string& name);

}  // namespace speclab
