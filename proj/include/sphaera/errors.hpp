#pragma once

#include <stdexcept>
#include <string>

namespace sphaera {

// Bad input: wrong domain, violated precondition, unparsable value.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration or construction disagreed with a closed form it must match.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sphaera
