#pragma once

#include <stdexcept>
#include <string>

namespace tpe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input was violated (degree too small,
/// modulus not an odd prime, tower mismatch, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Division by zero, or by a zero polynomial.
class DivisionByZero : public DomainError {
public:
    using DomainError::DomainError;
};

/// Inversion in a tower ring hit a zero divisor; the relation is reducible.
class ZeroDivisorError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A rational value has a denominator divisible by the residue characteristic.
class NonIntegralError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The curve does not have good reduction at the requested prime.
class BadReductionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Coefficient height exceeded the configured ceiling during exact arithmetic.
class HeightExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed external input (JSON documents, expressions, fixtures).
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace tpe
