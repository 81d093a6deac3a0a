#include "radext/error.hpp"

namespace radext {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FloatLiteralRefused: return "FloatLiteralRefused";
    case ErrorCode::EvalAtPole: return "EvalAtPole";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::NonAffineScalar: return "NonAffineScalar";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::NotInteriorPoint: return "NotInteriorPoint";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::DomainNotPositive: return "DomainNotPositive";
    case ErrorCode::ReconciliationFailure: return "ReconciliationFailure";
    case ErrorCode::NotKE: return "NotKE";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::StepFailure: return "StepFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InexactDivision: return "InexactDivision";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

} // namespace radext
