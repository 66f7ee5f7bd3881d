#pragma once

#include <stdexcept>
#include <string>

namespace qbell {

/// Raised when a coefficient table fails the reality condition (a Bell
/// functional with complex probability-space coefficients has no physical
/// interpretation) or is otherwise unusable as an inequality.
class InvalidInequalityError : public std::runtime_error {
public:
    explicit InvalidInequalityError(const std::string& what)
        : std::runtime_error(what) {}
};

/// Raised when an internal invariant is violated (eigensolver failure,
/// a proven operator bound exceeded, ...). Maps to exit code 2 in the CLI.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace qbell
