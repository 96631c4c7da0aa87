#pragma once

#include <stdexcept>
#include <string>

namespace mfw {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression text could not be parsed; `position` is a 0-based byte offset.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Operands live in different rings.
struct RingMismatchError : Error {
    RingMismatchError() : Error("ring mismatch") {}
    explicit RingMismatchError(const std::string& msg) : Error(msg) {}
};

// A computation exceeded its step or degree budget. Never a wrong answer:
// callers may retry with a larger budget.
struct BudgetExceededError : Error {
    using Error::Error;
};

// No exact polynomial cofactor representation is available (local-ordering
// certificates with a non-constant unit cannot be cleared).
struct CertificateUnavailableError : Error {
    using Error::Error;
};

// The Jacobian quotient is infinite dimensional over the local ring.
struct NotIsolatedError : Error {
    using Error::Error;
};

// An Euler pairing evaluated to a non-integer; this signals a convention bug
// in the Chern-character/residue pipeline, not a property of the input.
struct NonIntegerEulerError : Error {
    using Error::Error;
};

// A documented precondition was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

// Noncommutative completion did not stabilize below the degree bound.
struct NotFiniteError : Error {
    using Error::Error;
};

// An internal consistency check failed (indicates a bug, not bad input).
struct InternalError : Error {
    using Error::Error;
};

}  // namespace mfw
