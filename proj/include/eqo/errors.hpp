// errors.hpp - Exception taxonomy shared by all eqo modules

#pragma once

#include <stdexcept>
#include <string>

namespace eqo {

// Shape mismatch between operands: non-square expm input, product dimension
// conflicts, coupling/detuning length disagreements.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Parameter outside its mathematical domain: nonpositive Ohmic frequency,
// tolerance outside (0, 1e-6], negative durations.
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Non-finite values produced or consumed by a numeric kernel.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Symplectic or conjugation invariant of a transfer matrix drifted past the
// abort threshold; runs stop here rather than renormalize silently.
struct NumericDriftError : NumericError {
    explicit NumericDriftError(const std::string& what) : NumericError(what) {}
};

// Observable requested from a transfer matrix that cannot support it, e.g.
// survival probability under a squeezing drive.
struct InvalidObservableError : std::logic_error {
    explicit InvalidObservableError(const std::string& what) : std::logic_error(what) {}
};

// Fixed-step integrator violated a conservation check (trace drift).
struct IntegratorError : NumericError {
    explicit IntegratorError(const std::string& what) : NumericError(what) {}
};

// Scenario configuration could not be parsed or validated.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace eqo
