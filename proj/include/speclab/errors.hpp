#pragma once

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace speclab {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Concrete-syntax error with 1-based source location.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Structural problems in a specification: duplicate names, missing goals,
// unknown propositions, inconsistent Dom && G, non-BC inputs to filters.
class SpecError : public Error {
 public:
  using Error::Error;
};

struct SolverStats {
  std::size_t states = 0;
  std::size_t moves = 0;
};

// A satisfiability query ran out of its state or time budget.  Distinct from
// Unsat; callers must never fold this into a boolean answer.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, SolverStats stats)
      : Error(what), stats_(stats) {}
  const SolverStats& stats() const { return stats_; }

 private:
  SolverStats stats_;
};

// 2^|vocab| exceeds the configured alphabet cap for model counting.
class VocabularyTooLargeError : public Error {
 public:
  using Error::Error;
};

// Likelihood denominator #(Dom, k) is zero because Dom is unsatisfiable.
class DomUnsatError : public Error {
 public:
  using Error::Error;
};

// A filter or framework run hit an Unknown verdict and aborted; carries a
// diagnostic so the partial result can be reported as non-certified.
class FilterAbortedError : public Error {
 public:
  using Error::Error;
};

}  // namespace speclab
