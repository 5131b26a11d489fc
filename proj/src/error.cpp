#include "nnto/error.hpp"

namespace nnto {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::DanglingEdge: return "DanglingEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::EmptyLabel: return "EmptyLabel";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::Unbalanced: return "Unbalanced";
    case ErrorKind::BadK: return "BadK";
    case ErrorKind::BadTarget: return "BadTarget";
    case ErrorKind::InvalidTarget: return "InvalidTarget";
    case ErrorKind::InvalidOrdering: return "InvalidOrdering";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::NotIndependent: return "NotIndependent";
    case ErrorKind::WrongSize: return "WrongSize";
    case ErrorKind::NotFull: return "NotFull";
    case ErrorKind::IllegalStep: return "IllegalStep";
    case ErrorKind::NegativeSet: return "NegativeSet";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::PropositionGap: return "PropositionGap";
    case ErrorKind::ExtractionFailed: return "ExtractionFailed";
  }
  return "Unknown";
}

bool is_internal(ErrorKind kind) noexcept {
  return kind == ErrorKind::InternalInvariantViolation || kind == ErrorKind::PropositionGap ||
         kind == ErrorKind::ExtractionFailed;
}

}  // namespace nnto
