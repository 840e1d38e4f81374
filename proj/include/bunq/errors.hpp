#pragma once

#include <stdexcept>
#include <string>

namespace bunq {

/// Base class of all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation was called against its contract (e.g. mismatched cutoffs).
struct UsageError : Error {
    using Error::Error;
};

/// A value lies outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// A group or space spec string could not be parsed; the message names the offending token.
struct ParseError : Error {
    using Error::Error;
};

/// The even-cell hypothesis required by the non-conjectural cohomology output is not satisfied.
struct HypothesisError : Error {
    using Error::Error;
};

/// An internal invariant was violated; indicates a bug, never bad user input.
struct InternalError : Error {
    using Error::Error;
};

} // namespace bunq
