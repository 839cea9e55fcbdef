#pragma once

#include <stdexcept>
#include <string>

namespace entropia {

enum class ErrorCode {
    InvalidArgument,
    ParseError,
    IncompatibleModels,
    NotRepresentable,
    NotContained,
    NotAGroup,
    NotNormal,
    NotInvariant,
    NotAutomorphism,
    NotAbelian,
    NotConstantPattern,
    NotStable,
    QuotientNotRepresentable,
    HypothesisFailed,
    PreconditionFailed,
    IterationBudgetExceeded,
    TooLarge,
    ZeroMultiplier,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-readable error code next to the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace entropia
