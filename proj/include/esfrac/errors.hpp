#pragma once

#include <stdexcept>
#include <string>

namespace esfrac {

// Base for every error raised by the library. The CLI maps subclasses onto
// exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An intermediate product or sum left the 128-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

// A requested range exceeds the configured memory or desk-scale budget.
class LimitError : public Error {
public:
    using Error::Error;
};

// Precondition violated by the caller (bad argument).
class DomainError : public Error {
public:
    using Error::Error;
};

// Witness parameters fail the divisibility conditions they claim to satisfy.
class InvalidWitness : public Error {
public:
    using Error::Error;
};

// An audited inequality failed. Would falsify a proven bound.
class ClaimViolation : public Error {
public:
    using Error::Error;
};

}  // namespace esfrac
