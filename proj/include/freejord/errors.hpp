#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace freejord {

/// Caller supplied arguments that violate an operation's precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A requested computation exceeds the configured feasibility bound.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}

    /// Rough size estimate (matrix entries or similar) that triggered the refusal.
    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

/// Two or more primes disagree on a modular rank.
class UnluckyPrimeError : public std::runtime_error {
public:
    UnluckyPrimeError(const std::string& what, std::uint64_t prime)
        : std::runtime_error(what), prime_(prime) {}

    std::uint64_t prime() const noexcept { return prime_; }

private:
    std::uint64_t prime_;
};

/// Violated internal invariant; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace freejord
