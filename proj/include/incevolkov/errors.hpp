#pragma once

#include <stdexcept>
#include <string>

namespace incevolkov {

// Input outside the domain of an operation (negative intensity, n < 1, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The wave is evanescent: plasma frequency at or above the photon frequency.
class OverdenseError : public DomainError {
public:
    using DomainError::DomainError;
};

// A numerical structure that should hold by construction does not
// (non-symmetrizable recurrence, complex dense eigenvalues, ...).
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An oracle or iterative solver ran out of its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace incevolkov
