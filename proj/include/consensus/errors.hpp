#pragma once

#include <stdexcept>
#include <string>

namespace consensus {

// A topology description violates its structural constraints
// (nonpositive sizes, radius too large for a dimension, wrong norm
// for a closed-form request, ...).
struct InvalidSpecError : std::runtime_error {
    explicit InvalidSpecError(const std::string& what) : std::runtime_error(what) {}
};

// The graph has a zero Laplacian eigenvalue of multiplicity > 1.
struct DisconnectedError : std::runtime_error {
    explicit DisconnectedError(const std::string& what) : std::runtime_error(what) {}
};

// Closed forms exist only for all-even or all-odd dimension lists.
struct UnsupportedParityError : std::runtime_error {
    explicit UnsupportedParityError(const std::string& what) : std::runtime_error(what) {}
};

// A scalar argument is outside its documented domain.
struct OutOfRangeError : std::runtime_error {
    explicit OutOfRangeError(const std::string& what) : std::runtime_error(what) {}
};

// A constrained search has an empty feasible set.
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// The iteration exhausted its budget or diverged.
struct NoConvergenceError : std::runtime_error {
    explicit NoConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace consensus
