#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace defset {

enum class ErrorCode {
    NotPrime,
    NotPrimitivePolynomial,
    SizeLimit,
    NotDivisor,
    LogOfZero,
    ZeroInput,
    MixedPrimes,
    ElementNotInGroup,
    EmptySet,
    EvenCharacteristic,
    EvenDegree,
    NotTwoToOne,
    NotQuadraticForm,
    PreconditionFailed,
    UnknownKind,
    NonRationalSum,
    NonIntegralWeight,
    ZeroDimensional,
    DuplicateElement,
    ParseError,
};

inline std::string_view to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NotPrimitivePolynomial: return "NotPrimitivePolynomial";
        case ErrorCode::SizeLimit: return "SizeLimit";
        case ErrorCode::NotDivisor: return "NotDivisor";
        case ErrorCode::LogOfZero: return "LogOfZero";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::MixedPrimes: return "MixedPrimes";
        case ErrorCode::ElementNotInGroup: return "ElementNotInGroup";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
        case ErrorCode::EvenDegree: return "EvenDegree";
        case ErrorCode::NotTwoToOne: return "NotTwoToOne";
        case ErrorCode::NotQuadraticForm: return "NotQuadraticForm";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::UnknownKind: return "UnknownKind";
        case ErrorCode::NonRationalSum: return "NonRationalSum";
        case ErrorCode::NonIntegralWeight: return "NonIntegralWeight";
        case ErrorCode::ZeroDimensional: return "ZeroDimensional";
        case ErrorCode::DuplicateElement: return "DuplicateElement";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace defset
