#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclo {

// Precondition violations on mathematical domains (n = 0, gamma outside (2,e), ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Caller broke an interface contract (e.g. pr_bound input not sorted by degree).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requested work exceeds the configured budget (tau cap on subset enumeration).
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& msg, std::uint64_t required_subsets)
        : std::runtime_error(msg), required_subsets(required_subsets) {}
    std::uint64_t required_subsets;
};

// Allocation would exceed the configured memory cap (sieve tables).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal consistency failure. A non-exact "exact" division lands here; it
// signals a bookkeeping bug in the caller, not bad user input.
class IntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Unknown psi-function name or similar run-configuration mistake.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// File-system failures in the persistence layer.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cyclo
