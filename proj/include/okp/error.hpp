#pragma once

#include <stdexcept>
#include <string>

namespace okp {

/// Raised when an argument violates an operation's precondition
/// (bad vertex index, non-hull edge passed to concatenate, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed its configured budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace okp
