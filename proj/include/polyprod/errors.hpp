#pragma once

#include <stdexcept>
#include <string>

namespace polyprod {

/// Rejected input: a violated precondition the caller can fix.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The request is well formed but lies outside what a formula is asserted for
/// (for example torsion under integer coefficients in a tensor formula).
class OutOfScopeError : public std::domain_error {
public:
    explicit OutOfScopeError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace polyprod
