#ifndef NRLAB_ERRORS_HPP
#define NRLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nrlab {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameterError : Error {
    using Error::Error;
};

// Non-uniform grid passed to a check that needs equal spacing.
struct InvalidGridError : Error {
    using Error::Error;
};

// Radial profile is not positive/non-increasing.
struct InvalidProfileError : Error {
    using Error::Error;
};

// Evaluation point outside the map's domain.
struct OutOfDomainError : Error {
    using Error::Error;
};

struct NoConvergenceError : Error {
    NoConvergenceError(const std::string& what, double residual)
        : Error(what), last_residual(residual) {}
    explicit NoConvergenceError(const std::string& what) : Error(what), last_residual(0) {}
    double last_residual;
};

// Input polynomial has a non-negligible even-index coefficient.
struct NotOddError : Error {
    using Error::Error;
};

// A guaranteed internal inequality failed; indicates a truncation bug.
struct InternalConsistencyError : Error {
    using Error::Error;
};

// A verifier's hypothesis (e.g. f(0)=0) does not hold for the given map.
struct HypothesisViolatedError : Error {
    using Error::Error;
};

// Numerical range is a single point; ratio undefined.
struct DegenerateRangeError : Error {
    using Error::Error;
};

struct InvalidPolynomialError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace nrlab

#endif  // NRLAB_ERRORS_HPP
