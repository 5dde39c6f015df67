#pragma once

#include <stdexcept>
#include <string>

namespace faircenter {

/// Invalid caller input: shape mismatches, out-of-range parameters, bad configs.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Instance exceeds a brute-force enumeration guard.
struct SizeLimitError : InputError {
    using InputError::InputError;
};

/// Dataset file could not be parsed into a valid point set + group model.
struct LoadError : InputError {
    using InputError::InputError;
};

/// A point lies outside every center ball at the requested radius.
/// The radius search treats this as "radius too small".
struct UnreachablePointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The fairness bounds admit no assignment even with unconstrained radius.
struct InfeasibleFairnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The LP solver hit its iteration cap. Distinct from "infeasible" so the
/// caller never mislabels a solver breakdown as a proven answer.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (bug, not user error).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace faircenter
