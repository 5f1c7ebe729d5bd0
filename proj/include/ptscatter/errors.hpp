#ifndef PTSCATTER_ERRORS_HPP
#define PTSCATTER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ptscatter {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameterError : Error {
    using Error::Error;
};

// Gamma-map radicand went negative (cannot happen for real gamma, E > V').
struct DomainError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    ConvergenceError(const std::string& what, double residual)
        : Error(what), residual(residual) {}
    double residual;
};

// k_left + k_right vanished at an interface.
struct SingularInterfaceError : Error {
    explicit SingularInterfaceError(const std::string& what, int interface_index = -1)
        : Error(what), interface_index(interface_index) {}
    int interface_index;
};

// e^{-2ikd} - r' r vanished in a star combination (geometric series diverges).
struct ResonantSingularityError : Error {
    explicit ResonantSingularityError(const std::string& what, int interface_index = -1)
        : Error(what), interface_index(interface_index) {}
    int interface_index;
};

struct SingularSystemError : Error {
    SingularSystemError(const std::string& what, double condition_estimate)
        : Error(what), condition_estimate(condition_estimate) {}
    double condition_estimate;
};

struct WindowViolationError : Error {
    using Error::Error;
};

struct NoneFoundError : Error {
    using Error::Error;
};

struct BracketError : Error {
    using Error::Error;
};

struct InsufficientDataError : Error {
    using Error::Error;
};

struct DegenerateError : Error {
    using Error::Error;
};

struct ZeroEigenvalueError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace ptscatter

#endif
