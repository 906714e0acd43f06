#pragma once

#include <stdexcept>
#include <string>

namespace roughheston {

// Invalid parameters or configuration (violated type invariants).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input outside the domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Operation requires a different case label for u.
class CaseError : public DomainError {
public:
    using DomainError::DomainError;
};

// Requested time is at or beyond the explosion time.
class ExplosionError : public DomainError {
public:
    using DomainError::DomainError;
};

// Argument beyond the range of an inverse map.
class RangeError : public DomainError {
public:
    using DomainError::DomainError;
};

// No blow-up before the solver horizon where one was expected.
class HorizonError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluation outside the implemented accuracy envelope.
class AccuracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A root finder could not bracket its target.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace roughheston
