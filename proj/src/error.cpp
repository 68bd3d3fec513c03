#include "toricdm/error.hpp"

namespace toricdm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::LatticeNotFull: return "LatticeNotFull";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorCode::GeneratorNotInSemigroup: return "GeneratorNotInSemigroup";
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::NotScored: return "NotScored";
    case ErrorCode::IsNormal: return "IsNormal";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::NoInteriorPoint: return "NoInteriorPoint";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::ClassRankMismatch: return "ClassRankMismatch";
    case ErrorCode::ClassNotEnumerated: return "ClassNotEnumerated";
    case ErrorCode::EnumerationIncomplete: return "EnumerationIncomplete";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace toricdm
