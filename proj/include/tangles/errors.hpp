#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tangles {

// Input could not be parsed (graph/matroid text, CLI values). Exit code 1.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An operation's stated precondition does not hold. Exit code 2.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Projected or actual work exceeds the configured budget. Never silently
// truncates; the caller either raises the budget or accepts the refusal.
// Exit code 3.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultWorkBudget = 10'000'000;

// Cheap work meter shared across the phases of one operation.
class WorkBudget {
public:
    explicit WorkBudget(std::uint64_t limit = kDefaultWorkBudget) : limit_(limit) {}

    void charge(std::uint64_t amount, const char* what) {
        used_ += amount;
        if (used_ > limit_)
            throw BudgetError(std::string("work budget exceeded in ") + what);
    }

    // Upfront guard for a projected candidate count.
    void require(std::uint64_t projected, const char* what) const {
        if (projected > limit_)
            throw BudgetError(std::string("projected work exceeds budget in ") + what);
    }

    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

} // namespace tangles
