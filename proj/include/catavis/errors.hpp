#pragma once

#include <stdexcept>
#include <string>

namespace catavis {

/// Base class for all catavis errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the domain an operation is defined on.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Parameter values violate a model's validity constraints.
class InvalidParams : public Error {
public:
    using Error::Error;
};

/// Input carries no usable information (all screens at one distance, ...).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// Too few rays of a fan survived reflection to report a span.
class InsufficientHits : public Error {
public:
    using Error::Error;
};

/// Mismatched data/parameter dimensions handed to the solver.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Base class for numerical-failure errors (maps to CLI exit code 3).
class FitError : public Error {
public:
    using Error::Error;
};

/// A nonlinear fit diverged or could not be carried out.
class FitFailed : public FitError {
public:
    using FitError::FitError;
};

/// Damping exhausted without a usable step; the Jacobian is rank deficient.
class SingularJacobian : public FitError {
public:
    using FitError::FitError;
};

/// A sweep specification produced no grid points.
class EmptyGrid : public Error {
public:
    using Error::Error;
};

/// Two MAE reports do not share a distance grid.
class GridMismatch : public Error {
public:
    using Error::Error;
};

/// An estimate is missing the ground truth needed for error metrics.
class MissingTruth : public Error {
public:
    using Error::Error;
};

/// File or format problem on an external interface.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace catavis
