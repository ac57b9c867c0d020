#pragma once

#include <stdexcept>
#include <string>

namespace dmodes {

// Argument outside the mathematical domain of an operation (pole, omega <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A numerical procedure failed to deliver a result (NaN integrand, bracket
// expansion exhausted, quadrature budget exceeded when the caller asked for it).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dmodes
