#pragma once

#include <stdexcept>
#include <string>

namespace wright {

// Argument outside the mathematical domain of an operation (poles included).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Result not representable in double precision.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// An iterative method (series, continued fraction, quadrature) did not settle.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed manifest text; the message carries the line number.
class ManifestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace wright
