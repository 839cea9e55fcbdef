#include "errors.hpp"

namespace entropia {

const char* error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument:          return "InvalidArgument";
    case ErrorCode::ParseError:               return "ParseError";
    case ErrorCode::IncompatibleModels:       return "IncompatibleModels";
    case ErrorCode::NotRepresentable:         return "NotRepresentable";
    case ErrorCode::NotContained:             return "NotContained";
    case ErrorCode::NotAGroup:                return "NotAGroup";
    case ErrorCode::NotNormal:                return "NotNormal";
    case ErrorCode::NotInvariant:             return "NotInvariant";
    case ErrorCode::NotAutomorphism:          return "NotAutomorphism";
    case ErrorCode::NotAbelian:               return "NotAbelian";
    case ErrorCode::NotConstantPattern:       return "NotConstantPattern";
    case ErrorCode::NotStable:                return "NotStable";
    case ErrorCode::QuotientNotRepresentable: return "QuotientNotRepresentable";
    case ErrorCode::HypothesisFailed:         return "HypothesisFailed";
    case ErrorCode::PreconditionFailed:       return "PreconditionFailed";
    case ErrorCode::IterationBudgetExceeded:  return "IterationBudgetExceeded";
    case ErrorCode::TooLarge:                 return "TooLarge";
    case ErrorCode::ZeroMultiplier:           return "ZeroMultiplier";
    }
    return "Unknown";
}

} // namespace entropia
