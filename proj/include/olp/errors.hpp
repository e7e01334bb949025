#ifndef OLP_ERRORS_HPP
#define OLP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace olp {

/// Base class for all recoverable errors raised by the library.
/// The experiment runner catches these per trial and records them
/// instead of aborting a batch.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Expected edge count of an explicit sample exceeds the memory budget.
/// Callers should switch to the lazy backend.
class budget_exceeded : public error {
public:
    using error::error;
};

/// Instance is too large for an exhaustive oracle.
class size_limit_exceeded : public error {
public:
    using error::error;
};

/// A path count does not fit in the configured integer width.
class count_overflow : public error {
public:
    using error::error;
};

/// A root finder could not bracket a sign change on its search interval.
class no_bracket : public error {
public:
    using error::error;
};

/// Not enough data for a statistical procedure to be valid.
class insufficient_trials : public error {
public:
    using error::error;
};

} // namespace olp

#endif
