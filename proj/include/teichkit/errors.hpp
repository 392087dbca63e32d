#pragma once

#include <stdexcept>
#include <string>

namespace teichkit {

// Evaluation outside the domain of validity (|z| >= rho and friends).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An image left the compact set it was required to stay in.
struct ContainmentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A named precondition failed (a_1 = 0, duplicate punctures, bad config, ...).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iterative solver did not reach its tolerance.
struct SolverError : std::runtime_error {
    SolverError(const std::string& what, double last_residual, int iterations)
        : std::runtime_error(what), last_residual(last_residual), iterations(iterations) {}
    double last_residual;
    int iterations;
};

// Malformed input file.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace teichkit
