#pragma once

#include <stdexcept>
#include <string>

namespace dynfactor {

/// Raised when an operation's inputs are outside its mathematical domain
/// (zero polynomial, bad prime, degree cap, ...). The CLI maps it to exit 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (rationals, polynomials). The CLI maps it to exit 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dynfactor
