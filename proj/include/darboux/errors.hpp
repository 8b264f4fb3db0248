#pragma once

#include <stdexcept>
#include <string>

namespace darboux {

/// Input fails a structural precondition (exit code 3 at the CLI).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeTooLow : ValidationError {
    using ValidationError::ValidationError;
};

struct CommonFactor : ValidationError {
    std::string factor;
    explicit CommonFactor(std::string f)
        : ValidationError("P and Q share the nonconstant factor " + f), factor(std::move(f)) {}
};

struct NonReducedCurve : ValidationError {
    using ValidationError::ValidationError;
};

/// R_{m+1} vanishes identically; divisor-based analyses are unavailable
/// (exit code 4 at the CLI for search).
struct DicriticalInfinity : std::runtime_error {
    DicriticalInfinity() : std::runtime_error("dicritical infinity: x*Q_m - y*P_m vanishes identically") {}
};

} // namespace darboux
