// Error codes and the exception type shared by the whole library.
#pragma once

#include <stdexcept>
#include <string>

namespace wmg {

// Failure categories surfaced by library operations.  The CLI maps these
// onto its exit-code contract: negative solvability verdicts exit 1,
// malformed or out-of-domain input exits 2, exhausted budgets exit 3.
enum class ErrorCode {
  // Input and format problems.
  EmptyWord,
  DuplicateArc,
  ParseError,
  LabelAbsent,
  PreconditionViolated,
  NotCoprime,
  OrderViolated,
  AlphabetTooLarge,
  OutOfTheoremScope,
  // Structural problems in nets or transition systems.
  DuplicatePlace,
  SelfLoopPlace,
  NotEnabled,
  NotWmg,
  NotConnected,
  NoSemiflow,
  InconsistentDistances,
  NotDeterministic,
  NotAcyclic,
  // Exhausted search or state budgets.
  BoundExceeded,
  CycleBudgetExceeded,
  SearchSpaceTooLarge,
  // Negative solvability verdicts.
  NotPrimeParikh,
  NotARotation,
  BelowThreshold,
  NoSolution,
  NoMarkingMatches,
  PropertyBViolated,
  PropertyCViolated,
  NonConvex,
  NoRegionExists,
  PairConditionFailed,
  CertificationFailed,
};

// Stable identifier used in diagnostics and CLI output, e.g. "NotARotation".
const char* name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {});

  ErrorCode code() const { return code_; }
  // Machine-readable payload: the offending state, place, point, or word.
  const std::string& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message,
                       std::string witness = {});

}  // namespace wmg
