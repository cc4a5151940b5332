#pragma once

#include <stdexcept>

namespace uncert {

/// Malformed or inconsistent input (dimension mismatch, non-finite entry, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exponent outside the regime an operation is defined for.
struct RegimeError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Input the theorem explicitly excludes (the zero vector).
struct ExcludedInputError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A cross-coherence of zero; the bound would be infinite.
struct DegenerateBoundError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A frame-pair precondition (Parseval, p-norm equality) failed to certify.
struct ClassificationError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A randomized generator exhausted its retry budget.
struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace uncert
