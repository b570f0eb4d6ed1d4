#pragma once

#include <stdexcept>
#include <string>

namespace travwave {

// Base class for all solver errors. Subclasses map onto CLI exit codes:
// parameter/config -> 2, certification -> 3, convergence/monotonicity -> 4,
// simulation -> 5.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid or out-of-domain parameter (named inequality in the message).
class ParameterError : public Error {
public:
    using Error::Error;
};

// Bad run configuration (missing grid knot, malformed config file, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Grid too coarse to resolve an exponential kernel (|lambda|*h above threshold).
class ResolutionError : public Error {
public:
    using Error::Error;
};

// Profile left the admissible box [0, K] beyond tolerance.
class OrderingError : public Error {
public:
    using Error::Error;
};

// A closed-form candidate failed numerical certification.
class CertificationError : public Error {
public:
    double max_violation = 0.0;
    double worst_node = 0.0;
    CertificationError(const std::string& msg, double violation, double node)
        : Error(msg), max_violation(violation), worst_node(node) {}
};

// The iteration broke the sandwich lower <= phi_n <= phi_{n-1} (or
// monotonicity in t, or the box).  Carries where and by how much.
class MonotonicityError : public Error {
public:
    long step = 0;
    double location = 0.0;
    double amount = 0.0;
    MonotonicityError(const std::string& msg, long step_, double loc, double amt)
        : Error(msg), step(step_), location(loc), amount(amt) {}
};

// Iteration budget exhausted before the stopping rule fired.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// PDE simulation failure (blow-up, front left the window, ...).
class SimulationError : public Error {
public:
    using Error::Error;
};

} // namespace travwave
