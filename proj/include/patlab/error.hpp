#pragma once

#include <stdexcept>
#include <string>

namespace patlab {

/// Raised when caller-supplied data violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when two routes that must agree do not, or when an exact
/// computation leaves a residue it should not (e.g. a non-integral
/// coefficient after clearing factorials).
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

} // namespace patlab
