#pragma once

#include <stdexcept>
#include <string>

namespace circprime {

/// Argument outside the mathematical domain of an operation (k <= 1, modulus 0, n < 2 ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A configured budget (big-integer bits, enumeration cap) would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller-side precondition not met (e.g. gcd(k, n) != 1 for Euler's theorem).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal invariant was violated. Should be unreachable.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace circprime
