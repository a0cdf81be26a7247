#pragma once

#include <stdexcept>
#include <string>

namespace flowforms {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands live over different coefficient fields.
struct FieldMismatchError : Error {
    using Error::Error;
};

// Degree argument outside [0, n] (or the operation's stated range).
struct DegreeError : Error {
    using Error::Error;
};

// A structural check failed on user-supplied data (d^2 != 0, bad betti length, ...).
struct ValidationError : Error {
    using Error::Error;
};

// An internally computed containment/well-definedness check failed; the model
// itself is inconsistent.
struct ModelInconsistencyError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

// Exact zero denominator m + alpha*n met on the support of a Fourier solve.
struct ResonanceError : Error {
    ResonanceError(long m, long n, const std::string& what) : Error(what), m(m), n(n) {}
    long m, n;
};

// Solvability obstruction (the mean) is nonzero and mean subtraction was not requested.
struct ObstructionError : Error {
    using Error::Error;
};

struct NotHyperbolicError : Error {
    using Error::Error;
};

}  // namespace flowforms
