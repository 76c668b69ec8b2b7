#pragma once

#include <stdexcept>
#include <string>

namespace urh {

// Base class for everything this library throws on its own behalf.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (bad cs2, |v| >= 1, ...).
struct DomainError : Error {
    using Error::Error;
};

// Conserved state with no subluminal primitive preimage (|S| >= E, E <= 0, ...).
struct UnphysicalStateError : Error {
    using Error::Error;
};

// A wave curve was evaluated at or beyond its zero-density endpoint.
struct VacuumLimitError : Error {
    using Error::Error;
};

// Caller passed quantities that contradict each other (e.g. a star state that
// does not lie on the curve it is claimed to lie on).
struct InconsistentInputError : Error {
    using Error::Error;
};

// An iteration failed to converge or produced something impossible; indicates
// a bug or an input far outside the supported regime.
struct SolverFailureError : Error {
    using Error::Error;
};

// The two wave curves never intersect: the data would open a vacuum region,
// which this solver does not model.
struct NoIntersectionError : SolverFailureError {
    using SolverFailureError::SolverFailureError;
};

// Shock relations evaluated at the degenerate point vx == Vs.
struct DegenerateContactError : Error {
    using Error::Error;
};

// A finite-volume update produced a cell with no physical primitive state.
struct PositivityError : Error {
    PositivityError(std::size_t cell, const std::string& what)
        : Error("cell " + std::to_string(cell) + ": " + what), cell_index(cell) {}
    std::size_t cell_index;
};

// Bad run configuration (CLI or JSON). Maps to a distinct process exit code.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace urh
