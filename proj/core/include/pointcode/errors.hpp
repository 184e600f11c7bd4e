#pragma once

#include <stdexcept>
#include <string>

namespace pointcode {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not match (vector lengths, matrix dimensions).
struct DimensionError : Error {
    using Error::Error;
};

/// Design parameters violate rv = bk or r(k-1) = lambda(v-1).
struct AdmissibilityError : Error {
    using Error::Error;
};

/// A candidate object failed a structural check; the message names the
/// first offending row, column or pair.
struct ValidationError : Error {
    using Error::Error;
};

/// An exhaustive enumeration would be too large; pass an explicit
/// override to run it anyway.
struct GuardError : Error {
    using Error::Error;
};

/// A search exceeded its node budget. If the job had a checkpoint path the
/// partial state has been written there and the run is resumable.
struct BudgetError : Error {
    explicit BudgetError(const std::string& what, std::string checkpoint = {})
        : Error(what), checkpoint_path(std::move(checkpoint)) {}
    std::string checkpoint_path;
};

/// Record-level parse failure; the message carries the line number.
struct ParseError : Error {
    using Error::Error;
};

/// A report was requested from a catalog whose prerequisite stage never ran.
struct StageError : Error {
    using Error::Error;
};

}  // namespace pointcode
