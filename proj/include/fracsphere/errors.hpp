#pragma once

#include <stdexcept>
#include <string>

namespace fracsphere {

// Argument outside the domain of a special function or pointwise map.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// (n, s, q) or an operator/inequality combination that no theorem covers.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised by sharp_constant at s = 0, where the constant belongs to K0'.
class ZeroOrderError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

// Not enough quadrature nodes or grid points for the requested bandwidth.
class ResolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The quotient Q[F] is 0/0 on (numerically) constant fields.
class UndefinedQuotient : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Euclidean fields whose tails are not resolved by the grid window.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Non-finite state in the flow integrator.
class BlowUpError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Too few usable samples for a fit.
class InsufficientData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fracsphere
