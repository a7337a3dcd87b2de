#pragma once

#include <stdexcept>
#include <string>

namespace fpl {

struct WordParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MismatchedAlphabet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown by compare_pair when the two autocorrelations coincide; the caller
// should route the pair to equal_class_check instead.
struct EqualAutocorrelations : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct HorizonTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A crossing (or its growth certificate) did not fit in the computed horizon.
// Carries the horizon that was attempted so callers can retry with a larger one.
struct HorizonExhausted : std::runtime_error {
    int horizon_attempted;
    explicit HorizonExhausted(int horizon)
        : std::runtime_error("horizon exhausted at " + std::to_string(horizon)),
          horizon_attempted(horizon) {}
    HorizonExhausted(int horizon, const std::string& what)
        : std::runtime_error(what + " (horizon " + std::to_string(horizon) + ")"),
          horizon_attempted(horizon) {}
};

struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A property that is supposed to hold unconditionally failed on concrete data.
// Never swallowed: surfaces as exit code 3 at the CLI boundary.
struct InvariantFalsified : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fpl
