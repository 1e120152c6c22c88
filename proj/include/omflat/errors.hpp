#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace omflat {

/// Malformed or out-of-range arguments.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Mathematically impossible request (degenerate configuration, rank drop, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Wall-clock budget polled from long-running loops.
class Budget {
public:
    Budget() = default;
    explicit Budget(double seconds)
        : limited_(seconds > 0),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(seconds))) {}

    bool expired() const {
        return limited_ && std::chrono::steady_clock::now() > deadline_;
    }
    void check(const char* where) const {
        if (expired()) throw BudgetExceeded(std::string("budget exceeded in ") + where);
    }

private:
    bool limited_ = false;
    std::chrono::steady_clock::time_point deadline_{};
};

inline void poll(const Budget* budget, const char* where) {
    if (budget != nullptr) budget->check(where);
}

}  // namespace omflat
