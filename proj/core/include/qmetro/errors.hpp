#pragma once

#include <stdexcept>
#include <string>

namespace qmetro {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live on different site counts / Hilbert-space dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

// A dense expansion or trajectory store would exceed the configured limits.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Bad user input: malformed state, inconsistent grid, invalid parameter.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Malformed or contradictory scenario configuration.
class ConfigError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Requested construction has no implemented scheme.
class UnsupportedError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Coefficient scheme violates the constraint it must satisfy.
class ConstraintError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A drive would be sampled below the configured steps-per-period floor.
class UndersampledDriveError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Numerical failure at run time (non-finite values, failed line search, ...).
class NumericalError : public Error {
public:
    using Error::Error;
};

// Generator spectrum has no usable extremal gap.
class DegenerateGeneratorError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace qmetro
