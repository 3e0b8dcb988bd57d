#include "wmg/errors.hpp"

namespace wmg {

const char* name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::LabelAbsent: return "LabelAbsent";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::OrderViolated: return "OrderViolated";
    case ErrorCode::AlphabetTooLarge: return "AlphabetTooLarge";
    case ErrorCode::OutOfTheoremScope: return "OutOfTheoremScope";
    case ErrorCode::DuplicatePlace: return "DuplicatePlace";
    case ErrorCode::SelfLoopPlace: return "SelfLoopPlace";
    case ErrorCode::NotEnabled: return "NotEnabled";
    case ErrorCode::NotWmg: return "NotWmg";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NoSemiflow: return "NoSemiflow";
    case ErrorCode::InconsistentDistances: return "InconsistentDistances";
    case ErrorCode::NotDeterministic: return "NotDeterministic";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::CycleBudgetExceeded: return "CycleBudgetExceeded";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::NotPrimeParikh: return "NotPrimeParikh";
    case ErrorCode::NotARotation: return "NotARotation";
    case ErrorCode::BelowThreshold: return "BelowThreshold";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NoMarkingMatches: return "NoMarkingMatches";
    case ErrorCode::PropertyBViolated: return "PropertyBViolated";
    case ErrorCode::PropertyCViolated: return "PropertyCViolated";
    case ErrorCode::NonConvex: return "NonConvex";
    case ErrorCode::NoRegionExists: return "NoRegionExists";
    case ErrorCode::PairConditionFailed: return "PairConditionFailed";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message, std::string witness)
    : std::runtime_error(std::string(name(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

void fail(ErrorCode code, const std::string& message, std::string witness) {
  throw Error(code, message, std::move(witness));
}

}  // namespace wmg
