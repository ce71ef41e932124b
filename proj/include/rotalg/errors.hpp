#pragma once

#include <stdexcept>
#include <string>

namespace rotalg {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside its admissible range (p not in [1,q-1], grid too coarse, ...).
struct RangeError : Error {
    using Error::Error;
};

// gcd(p,q) != 1.
struct CoprimalityError : Error {
    using Error::Error;
};

// Matrices of unequal dimension fed to a binary operation.
struct DimensionMismatch : Error {
    using Error::Error;
};

// Expression text rejected by the parser; `position` is a 0-based offset
// into the input string.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct EmptyExpression : SyntaxError {
    EmptyExpression() : SyntaxError("empty expression", 0) {}
};

// Binary polynomial operation across different (p,q).
struct ParamsMismatch : Error {
    using Error::Error;
};

struct NotSelfAdjoint : Error {
    using Error::Error;
};

struct NotUnitary : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// Section lattice finer-than-4q requirement violated.
struct ResolutionTooLow : Error {
    using Error::Error;
};

// Section lattice does not align with integer shifts (q must divide n).
struct ResolutionNotDivisible : Error {
    using Error::Error;
};

// Section failed the twisted-equivariance test where membership is required.
struct MembershipViolation : Error {
    using Error::Error;
};

// Requested Fourier box exceeds the lattice Nyquist limit.
struct AliasingRisk : Error {
    using Error::Error;
};

// Winding-number phase tracking lost the loop between adjacent samples.
struct PhaseJumpTooLarge : Error {
    using Error::Error;
};

// Miscellaneous precondition failures that have no more specific class.
struct DomainError : Error {
    using Error::Error;
};

// File / stream failures in the CLI layer.
struct IoError : Error {
    using Error::Error;
};

}  // namespace rotalg
