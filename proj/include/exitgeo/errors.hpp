#pragma once

#include <stdexcept>
#include <string>

namespace exitgeo {

/// Raised when an argument lies outside an operation's domain or violates a
/// documented precondition.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a numerical method cannot meet its requested tolerance
/// (quadrature budget exhausted, no sign change for a root, ...).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace exitgeo
