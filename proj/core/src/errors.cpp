#include "factorwidth/errors.hpp"

namespace fw {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ZeroDiagonalNonzeroRow: return "ZeroDiagonalNonzeroRow";
        case ErrorCode::NegativeEntryNonIntegerPower: return "NegativeEntryNonIntegerPower";
        case ErrorCode::NotPsd: return "NotPsd";
        case ErrorCode::NotChordal: return "NotChordal";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::BadK: return "BadK";
        case ErrorCode::BandTooWide: return "BandTooWide";
        case ErrorCode::NotTridiagonal: return "NotTridiagonal";
        case ErrorCode::InconsistentZeroPivot: return "InconsistentZeroPivot";
        case ErrorCode::NotArrowhead: return "NotArrowhead";
        case ErrorCode::NotDdEquality: return "NotDdEquality";
        case ErrorCode::BadSeed: return "BadSeed";
        case ErrorCode::TargetNotAboveOne: return "TargetNotAboveOne";
        case ErrorCode::HypothesisFailed: return "HypothesisFailed";
        case ErrorCode::NotFactorWidth2: return "NotFactorWidth2";
        case ErrorCode::BadBlockStructure: return "BadBlockStructure";
        case ErrorCode::BadArgs: return "BadArgs";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::DegenerateSubmatrix: return "DegenerateSubmatrix";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::BadRegime: return "BadRegime";
    }
    return "Unknown";
}

}  // namespace fw
