#pragma once

#include <stdexcept>
#include <string>

namespace qmet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter outside its admissible range (eta, visibility, ...).
struct DomainError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct NotHermitianError : Error {
    using Error::Error;
};

struct NotPsdError : Error {
    using Error::Error;
};

// Jacobi sweeps exhausted without reaching the off-diagonal tolerance.
struct ConvergenceError : Error {
    using Error::Error;
};

// An outcome has vanishing probability but non-vanishing phi-derivative;
// the Fisher information diverges and the caller must decide what to do.
struct DivergentInformationError : Error {
    using Error::Error;
};

// Likelihood carries no phase dependence (eta*V == 0).
struct FlatLikelihoodError : Error {
    using Error::Error;
};

// Observed counts impossible under the model for every phase value.
struct InfeasibleCountsError : Error {
    using Error::Error;
};

// Requested quantity cannot be recovered from these counts (local
// strategy cannot separate noise from phase).
struct NotIdentifiableError : Error {
    using Error::Error;
};

// Conditioning on an outcome of (near-)zero probability.
struct CannotConditionError : Error {
    using Error::Error;
};

struct IncompleteDataError : Error {
    using Error::Error;
};

}  // namespace qmet
