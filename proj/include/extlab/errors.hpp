#pragma once

#include <stdexcept>
#include <string>

namespace extlab {

// Invalid arguments / violated preconditions. The CLI maps this to exit code 2
// when raised during config validation.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A computation refused to run because it could not be resolved within its
// node/evaluation budget. Distinct from failure: nothing was computed.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical procedure did not meet its own accuracy contract (e.g. Newton
// stagnated, reduction residual out of range).
struct NumericsError : std::runtime_error {
    explicit NumericsError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace extlab
