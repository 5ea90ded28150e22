#pragma once

#include <stdexcept>
#include <string>

namespace fluxqm {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input lies outside the domain where the quantity is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested transition does not exist for these parameters.
class NoTransitionError : public Error {
public:
    using Error::Error;
};

/// Two particles share a quantum number.
class PauliError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed call (mismatched lengths, unknown keys, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

/// An iterative or truncated computation failed to meet its tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double achieved)
        : Error(what + " (achieved residual " + std::to_string(achieved) + ")"), achieved_(achieved) {}

    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

}  // namespace fluxqm
