#pragma once

#include <stdexcept>
#include <string>

namespace hyperpi {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Violated mathematical precondition: division by a series without constant
// term, sqrt of a negative enclosure, singular branch point, and so on.
// The CLI maps these to exit code 3 (numerical failure).
struct NumericalError : Error {
    explicit NumericalError(const std::string& what) : Error(what) {}
};

// Malformed input: bad rational literal, unknown catalog key, an identity
// referencing a missing entry. The CLI maps these to exit code 2.
struct ParseError : Error {
    ParseError(const std::string& what, int line = 0, int col = 0)
        : Error(line <= 0
                    ? what
                    : col <= 0
                          ? "line " + std::to_string(line) + ": " + what
                          : "line " + std::to_string(line) + ", col " +
                                std::to_string(col) + ": " + what),
          line(line), col(col) {}
    int line;
    int col;
};

// A verification that was expected to hold failed (load-time catalog check,
// re-verification of a normalized identity). CLI exit code 1.
struct VerificationError : Error {
    explicit VerificationError(const std::string& what) : Error(what) {}
};

} // namespace hyperpi
