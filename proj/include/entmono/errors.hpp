#pragma once

#include <stdexcept>
#include <string>

namespace entmono {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad caller input: malformed matrices, out-of-range parameters, shape
// mismatches. The CLI maps these to exit code 1.
struct InvalidInputError : Error {
    using Error::Error;
};

// A decomposition failed to converge or produced garbage. Exit code 2.
struct NumericalFailureError : Error {
    using Error::Error;
};

struct NotSquareError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct NotHermitianError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct NotPsdError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct NotNormalizedError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct ZeroStateError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct DimensionMismatchError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct WrongDimensionError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct InvalidParameterError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct TooFewPointsError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct ParseError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

// Bad command line (unknown flag, malformed frame string, inverted range).
struct UsageError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

}  // namespace entmono
