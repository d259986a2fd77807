#pragma once

#include <stdexcept>
#include <string>

namespace jacobiq {

enum class ErrorCode {
    Singular,
    NotAdmissible,
    NotInGroup,
    RankTooLarge,
    NotPositiveDefinite,
    NonSymmetric,
    DimensionMismatch,
    NotPrimitive,
    InconsistentSeed,
    InconsistentExpansion,
    PrecisionMismatch,
    InsufficientPrecision,
    NotUpperHalfPlane,
    RankOutOfRange,
    InvalidArgument,
};

const char* error_code_name(ErrorCode c);

// Library failure carrying a code and an optional witness (free-form, JSON-ready text).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string witness = {})
        : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    ErrorCode code_;
    std::string witness_;
};

}  // namespace jacobiq
