#pragma once

#include <stdexcept>
#include <string>

namespace pmds {

/// Inversion of a zero divisor or zero; in the reducible quotient ring this
/// is how a non-correctable pattern first shows up.
struct NotInvertibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No invertible pivot available during elimination.
struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The erasure pattern exceeds what the code instance can recover.
struct NotCorrectableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exhaustive search would exceed the configured pattern budget.
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No closed-form verification rule covers this parameter combination.
struct UnsupportedCaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pmds
