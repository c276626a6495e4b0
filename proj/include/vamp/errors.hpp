#pragma once

#include <stdexcept>
#include <string>

namespace vamp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSpec : Error {
    using Error::Error;
};

// Carries the 1-based position of the offending input.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& what, int line_, int column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

struct NotAPrimitive : Error {
    using Error::Error;
};

struct OutOfBounds : Error {
    using Error::Error;
};

struct NegativeRadius : Error {
    using Error::Error;
};

struct Collision : Error {
    using Error::Error;
};

struct NoPath : Error {
    using Error::Error;
};

struct InvalidPath : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace vamp
