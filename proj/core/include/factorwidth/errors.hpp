#pragma once

#include <stdexcept>
#include <string>

namespace fw {

/// Failure categories raised by the library. Every throwing operation
/// documents which of these it can raise; the CLI maps them to exit codes
/// (ParseError -> 2, everything else -> 3).
enum class ErrorCode {
    ParseError,
    DimensionMismatch,
    ZeroDiagonalNonzeroRow,
    NegativeEntryNonIntegerPower,
    NotPsd,
    NotChordal,
    TooLarge,
    BadK,
    BandTooWide,
    NotTridiagonal,
    InconsistentZeroPivot,
    NotArrowhead,
    NotDdEquality,
    BadSeed,
    TargetNotAboveOne,
    HypothesisFailed,
    NotFactorWidth2,
    BadBlockStructure,
    BadArgs,
    Overflow,
    DegenerateSubmatrix,
    CapExceeded,
    BadRegime,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace fw
