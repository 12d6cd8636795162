#pragma once

#include <stdexcept>
#include <string>

namespace cavmode {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Degenerate mode function: the |K|^2 integral vanished (no capacitance).
class ZeroFieldError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Degenerate mode function: the |curl K|^2 integral vanished (infinite
/// inductance, non-oscillatory mode).
class ZeroCurlError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A pulse profile drives the instantaneous squared frequency non-positive.
class NonPositiveFrequencyError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A numerical routine failed to reach its requested accuracy.
class NumericsError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature exhausted its budget before converging.
class QuadratureError : public NumericsError {
public:
    using NumericsError::NumericsError;
};

/// Adaptive ODE integration failed (step size underflow).
class IntegratorError : public NumericsError {
public:
    using NumericsError::NumericsError;
};

/// A truncated series hit its term cap before reaching tolerance.
class TruncationError : public NumericsError {
public:
    using NumericsError::NumericsError;
};

/// Static instability: the zero-frequency self-energy exceeds the bare
/// squared frequency, so no real shifted frequency exists.
class UnstableStaticError : public Error {
public:
    explicit UnstableStaticError(double omega0_squared)
        : Error("static instability: Pi(0) >= Omega_inf^2, omega0^2 = "
                + std::to_string(omega0_squared)),
          omega0_squared_(omega0_squared) {}

    /// Instability strength Pi(0) - Omega_inf^2 (>= 0).
    double omega0_squared() const noexcept { return omega0_squared_; }

private:
    double omega0_squared_;
};

} // namespace cavmode
