#pragma once

#include <stdexcept>
#include <string>

namespace monrep {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structural invariant violated (bad quiver, non-minimal ideal, rep relation
/// nonzero, dimension mismatch, ...).  The message names the offending object.
struct ValidationError : Error {
    using Error::Error;
};

/// Exact rational arithmetic left the representable range.  Computations are
/// never silently wrong: callers should switch to a prime field.
struct ArithmeticOverflow : Error {
    using Error::Error;
};

/// Input text could not be parsed; carries a 1-based source position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg), line(line_), column(column_) {}
};

} // namespace monrep
