#pragma once

#include <stdexcept>
#include <string>

namespace hnnp {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    using Error::Error;
};

struct NotNormal : Error {
    using Error::Error;
};

struct NotCompatible : Error {
    using Error::Error;
};

struct NotAHomomorphism : Error {
    using Error::Error;
};

struct NotPGroup : Error {
    using Error::Error;
};

struct NotInSubgroup : Error {
    using Error::Error;
};

struct NotAnAutomorphism : Error {
    using Error::Error;
};

struct UnknownSymbol : Error {
    using Error::Error;
};

struct Inapplicable : Error {
    using Error::Error;
};

struct SeriesTooLong : Error {
    using Error::Error;
};

/// Coset enumeration exceeded its coset cap.
struct Overflow : Error {
    using Error::Error;
};

/// A brute-force enumeration was asked for a group above its size cap.
struct CapExceeded : Error {
    using Error::Error;
};

/// Witness materialization exceeded the coset cap.
struct WitnessTooLarge : Error {
    using Error::Error;
};

/// An invariant the construction guarantees was observed to fail.
/// This signals a bug in the implementation, never a property of the input.
struct InternalInvariantViolation : Error {
    using Error::Error;
};

} // namespace hnnp
