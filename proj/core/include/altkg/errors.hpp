#pragma once

#include <stdexcept>
#include <string>

namespace altkg {

/// Raised when an input violates a documented precondition
/// (malformed JSON, an order that is not a permutation, t < 1, ...).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an instance exceeds a configured practical cap
/// (factorial cap for exact order search, vertex caps for exact solvers, ...).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a solver exhausts its node/time budget before reaching
/// a definite answer.  Callers that can live with intervals catch this.
class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

} // namespace altkg
