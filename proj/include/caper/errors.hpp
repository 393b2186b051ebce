#pragma once

#include <stdexcept>
#include <string>

namespace caper {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Inversion or division by the zero element of a field.
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

/// Malformed textual input (JSON, CSV, numbers, coefficients).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

/// A window (a, b] or a rank query (s, t) with out-of-order endpoints.
struct InvalidWindow : Error {
    explicit InvalidWindow(const std::string& what) : Error("invalid window: " + what) {}
};

/// A chain presented as a cycle whose boundary is nonzero.
struct NotACycle : Error {
    explicit NotACycle(const std::string& what) : Error("not a cycle: " + what) {}
};

/// A class that is already a boundary at the level where it was presented.
struct TrivialClass : Error {
    explicit TrivialClass(const std::string& what) : Error("trivial class: " + what) {}
};

/// The distinguished class vanishes at threshold 0 in the surrogate module.
/// Mirrors a capacity value of 0.
struct DeadAtZero : Error {
    DeadAtZero() : Error("class is dead at threshold 0") {}
};

/// No admissible epsilon gap below 0 for the surrogate construction.
struct EpsilonCollision : Error {
    EpsilonCollision() : Error("no epsilon gap below 0") {}
};

/// Resolution cap too small for the requested degree band.
struct CapTooSmall : Error {
    explicit CapTooSmall(const std::string& what) : Error("resolution cap too small: " + what) {}
};

/// strict_bracket applied to an infinite value.
struct Unbounded : Error {
    Unbounded() : Error("value is unbounded") {}
};

/// Invalid construction parameter (non-prime modulus, bad fixture size, ...).
struct BadParameter : Error {
    explicit BadParameter(const std::string& what) : Error("bad parameter: " + what) {}
};

/// The surrogate quotient in the requested degree has more than one
/// surviving generator, so "the" distinguished class is ambiguous.
struct AmbiguousGenerator : Error {
    explicit AmbiguousGenerator(const std::string& what) : Error("ambiguous generator: " + what) {}
};

/// A vertex without a function value in a lower-star construction.
struct MissingValue : Error {
    explicit MissingValue(const std::string& what) : Error("missing value: " + what) {}
};

/// Empty grid passed to the cubical builder.
struct EmptyGrid : Error {
    EmptyGrid() : Error("empty grid") {}
};

}  // namespace caper
