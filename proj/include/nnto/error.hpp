#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nnto {

enum class ErrorKind {
  // input validation
  CycleDetected,
  DuplicateLabel,
  DanglingEdge,
  SelfLoop,
  DuplicateEdge,
  EmptyLabel,
  NotAPermutation,
  PreconditionViolated,
  Unbalanced,
  BadK,
  BadTarget,
  InvalidTarget,
  InvalidOrdering,
  InvalidWitness,
  NotIndependent,
  WrongSize,
  NotFull,
  IllegalStep,
  NegativeSet,
  ParseError,
  Overflow,
  // resource limits
  CapExceeded,
  // a proof-backed guarantee did not hold
  InternalInvariantViolation,
  PropositionGap,
  ExtractionFailed,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// True for the kinds that indicate a broken guarantee rather than bad input.
bool is_internal(ErrorKind kind) noexcept;

}  // namespace nnto
