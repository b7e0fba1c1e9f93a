#include "dwork/error.hpp"

namespace dwork {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::BadModulusPolynomial: return "BadModulusPolynomial";
    case ErrorCode::NoGeneratorFound: return "NoGeneratorFound";
    case ErrorCode::LogOfZero: return "LogOfZero";
    case ErrorCode::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::TrivialCharacter: return "TrivialCharacter";
    case ErrorCode::TrivialProduct: return "TrivialProduct";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadDenominator: return "BadDenominator";
    case ErrorCode::SingularTerm: return "SingularTerm";
    case ErrorCode::LambdaZero: return "LambdaZero";
    case ErrorCode::LambdaFourthPowerOne: return "LambdaFourthPowerOne";
    case ErrorCode::LambdaDthPowerOne: return "LambdaDthPowerOne";
    case ErrorCode::InvalidExponents: return "InvalidExponents";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ConjectureModeRequired: return "ConjectureModeRequired";
    case ErrorCode::CancellationFailed: return "CancellationFailed";
    case ErrorCode::RoundingGuard: return "RoundingGuard";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadLambda: return "BadLambda";
    case ErrorCode::CacheFormat: return "CacheFormat";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

bool is_precondition(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NoGeneratorFound:
    case ErrorCode::CancellationFailed:
    case ErrorCode::RoundingGuard:
    case ErrorCode::CacheFormat:
    case ErrorCode::Io:
        return false;
    default:
        return true;
    }
}

} // namespace dwork
