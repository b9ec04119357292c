#pragma once

#include <stdexcept>
#include <string>

namespace freeconv {

// Raised when an operation's precondition on its mathematical input fails
// (crossing partition, series outside the required group, arity mismatch...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised for malformed textual / JSON input.
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace freeconv
