#pragma once

#include <stdexcept>
#include <string>

namespace ccrflow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejected input (CLI exit code 1).
struct ValidationError : Error {
    using Error::Error;
};

// A numerical contract was not met (CLI exit code 2).
struct ContractFailure : Error {
    using Error::Error;
};

struct DimensionMismatch : ValidationError {
    using ValidationError::ValidationError;
};

struct NotHermitian : ValidationError {
    using ValidationError::ValidationError;
};

struct NotPositive : ValidationError {
    using ValidationError::ValidationError;
};

struct DegenerateRealPart : ValidationError {
    using ValidationError::ValidationError;
};

struct NonPositiveR : ValidationError {
    using ValidationError::ValidationError;
};

struct BoundarySpectrum : ValidationError {
    using ValidationError::ValidationError;
};

struct CenterNotFree : ValidationError {
    using ValidationError::ValidationError;
};

struct MeasureMismatch : ValidationError {
    using ValidationError::ValidationError;
};

struct BlockMismatch : ValidationError {
    using ValidationError::ValidationError;
};

struct SingularDenominator : ValidationError {
    using ValidationError::ValidationError;
};

struct UnboundedSection : ValidationError {
    using ValidationError::ValidationError;
};

struct ParseError : ValidationError {
    using ValidationError::ValidationError;
};

struct GridTooCoarse : ContractFailure {
    using ContractFailure::ContractFailure;
};

} // namespace ccrflow
