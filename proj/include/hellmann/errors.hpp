#pragma once

#include <stdexcept>
#include <string>

namespace hellmann {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the physical domain (r <= 0, delta < 0, ...).
struct DomainError : Error {
    using Error::Error;
};

/// a < b: the Coulomb part cannot bind.
struct NoBoundStateError : DomainError {
    using DomainError::DomainError;
};

/// a == b: every perturbative term has a (a-b)^k denominator.
struct SingularDenominatorError : DomainError {
    using DomainError::DomainError;
};

struct UnsupportedStateError : Error {
    using Error::Error;
};

/// Quadrature or eigen-solve did not reach its tolerance.
struct NumericError : Error {
    NumericError(const std::string& what, double residual)
        : Error(what), residual(residual) {}
    double residual;
};

} // namespace hellmann
