#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace dickson {

// Predicted cost of an operation exceeds the configured budget. Carries the
// estimate so callers can print it instead of running out of memory.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, uint64_t estimated, uint64_t limit)
        : std::runtime_error(what + " (estimated " + std::to_string(estimated) +
                             " monomials, budget " + std::to_string(limit) + ")"),
          estimated_(estimated),
          limit_(limit) {}

    uint64_t estimated() const { return estimated_; }
    uint64_t limit() const { return limit_; }

private:
    uint64_t estimated_;
    uint64_t limit_;
};

// A structural identity failed to hold at the given parameters. This is a
// first-class result: the verification layer converts it into a reported
// witness, it is never swallowed.
class Falsification : public std::runtime_error {
public:
    Falsification(std::string check, std::string details)
        : std::runtime_error(check + ": " + details),
          check_(std::move(check)),
          details_(std::move(details)) {}

    const std::string& check() const { return check_; }
    const std::string& details() const { return details_; }

private:
    std::string check_;
    std::string details_;
};

}  // namespace dickson
