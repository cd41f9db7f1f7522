#include "infoatoms/error.hpp"

namespace infoatoms {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::DuplicateOutcome: return "DuplicateOutcome";
    case ErrorCode::AlphabetViolation: return "AlphabetViolation";
    case ErrorCode::SupportTooLarge: return "SupportTooLarge";
    case ErrorCode::CyclicDefinition: return "CyclicDefinition";
    case ErrorCode::UnknownBit: return "UnknownBit";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::TooManySources: return "TooManySources";
    case ErrorCode::NotANode: return "NotANode";
    case ErrorCode::UnsupportedArity: return "UnsupportedArity";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::NegativeRedundancy: return "NegativeRedundancy";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::AxiomViolated: return "AxiomViolated";
    case ErrorCode::ArityUnsupported: return "ArityUnsupported";
    case ErrorCode::StateStillOpen: return "StateStillOpen";
    case ErrorCode::KeyMismatch: return "KeyMismatch";
    case ErrorCode::ReproductionFailed: return "ReproductionFailed";
  }
  return "Unknown";
}

}  // namespace infoatoms
