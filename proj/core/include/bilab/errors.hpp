#pragma once

#include <stdexcept>
#include <string>

namespace bilab {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when exact and numeric values meet in one operation.
/// Mixing modes is always an explicit conversion, never an accident.
struct ModeMismatch : Error {
    ModeMismatch() : Error("operands mix exact and numeric modes") {}
    using Error::Error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
    using Error::Error;
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
    using Error::Error;
};

/// The N_jl factor of a graph transform is not invertible.
struct SingularNjl : SingularMatrix {
    SingularNjl() : SingularMatrix("N_jl is singular") {}
};

/// Progression base is 0 or a root of unity, so powers would collide.
struct DegenerateBase : Error {
    using Error::Error;
};

/// Exact sampling hit fibers whose roots lie outside Q(i).
struct ExactSamplingUnavailable : Error {
    using Error::Error;
};

struct InsufficientPoints : Error {
    using Error::Error;
};

/// The bound field of a quadruple report needs a square histogram.
struct NonSquareInput : Error {
    NonSquareInput() : Error("bound requires m1 == m2") {}
    using Error::Error;
};

struct InsufficientSamples : Error {
    using Error::Error;
};

/// A condition the mathematics guarantees failed at runtime. Seeing this
/// means a bug (or a counterexample worth keeping); it maps to exit code 4.
struct InternalInvariant : Error {
    using Error::Error;
};

} // namespace bilab
