#pragma once

#include <stdexcept>
#include <string>

namespace zakw {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- input / validation failures (CLI exit code 2) ---

struct ValidationError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct NonPositiveHopping : ValidationError {
    using ValidationError::ValidationError;
};

// --- numerical / domain failures (CLI exit code 3) ---

struct NumericalError : Error {
    using Error::Error;
};

struct IsolatedBandViolation : NumericalError {
    using NumericalError::NumericalError;
};

struct DegenerateEigenvalue : NumericalError {
    using NumericalError::NumericalError;
};

struct RootFindingFailure : NumericalError {
    using NumericalError::NumericalError;
};

struct BandEdgeSingularity : NumericalError {
    using NumericalError::NumericalError;
};

struct DirichletPole : NumericalError {
    using NumericalError::NumericalError;
};

struct DirichletPoleOnBand : NumericalError {
    using NumericalError::NumericalError;
};

struct IllPlacedEnergy : NumericalError {
    using NumericalError::NumericalError;
};

struct NotInBand : NumericalError {
    using NumericalError::NumericalError;
};

struct NotInGap : NumericalError {
    using NumericalError::NumericalError;
};

struct SymmetryViolation : NumericalError {
    using NumericalError::NumericalError;
};

struct SnapFailure : NumericalError {
    using NumericalError::NumericalError;
};

struct QuadratureFailure : NumericalError {
    using NumericalError::NumericalError;
};

} // namespace zakw
