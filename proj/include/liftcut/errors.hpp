#pragma once

#include <stdexcept>
#include <string>

namespace liftcut {

/// Base for all liftcut errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (bad header, bad token, ...). Message carries the line number.
struct ParseError : Error {
    using Error::Error;
};

/// Input violates a documented precondition (self-loop, out-of-box entry, bad config).
struct ValidationError : Error {
    using Error::Error;
};

/// Array shapes do not match the operation's contract.
struct ShapeError : Error {
    using Error::Error;
};

/// Non-finite value produced during optimization. Maps to exit code 3 in the CLI.
struct NumericError : Error {
    using Error::Error;
};

} // namespace liftcut
