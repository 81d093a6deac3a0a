#ifndef RADEXT_ERROR_HPP
#define RADEXT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace radext {

enum class ErrorCode {
    ParseError,
    FloatLiteralRefused,
    EvalAtPole,
    ZeroPolynomial,
    InvalidInterval,
    NonAffineScalar,
    NonPositiveScale,
    NotInteriorPoint,
    NotInDomain,
    DimensionTooSmall,
    WrongDimension,
    DomainNotPositive,
    ReconciliationFailure,
    NotKE,
    NotARoot,
    UnknownExample,
    StepFailure,
    InvalidArgument,
    InexactDivision,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; `code()` names the
// failure class so callers can branch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace radext

#endif
