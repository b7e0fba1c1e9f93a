#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dwork {

enum class ErrorCode {
    NotPrime,
    ReducibleModulus,
    BadModulusPolynomial,
    NoGeneratorFound,
    LogOfZero,
    ElementOutOfRange,
    TrivialCharacter,
    TrivialProduct,
    BadModulus,            // q is not 1 mod the requested degree
    TooLarge,
    BadDenominator,
    SingularTerm,
    LambdaZero,
    LambdaFourthPowerOne,
    LambdaDthPowerOne,
    InvalidExponents,
    InvalidParams,
    ConjectureModeRequired,
    CancellationFailed,
    RoundingGuard,
    OutOfRange,
    BadLambda,
    CacheFormat,
    Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for errors caused by the caller's input rather than an internal fault.
bool is_precondition(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace dwork
