#pragma once

#include <stdexcept>
#include <string>

namespace qschub {

/// Raised when an argument lies outside the domain of a correspondence or
/// construction (containment, descent shape, degree range, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by text/JSON parsers on malformed input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace qschub
