#pragma once

#include <stdexcept>
#include <string>

namespace charp {

// Base class for everything thrown by the library on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text; carries a 1-based position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line;
    int col;
};

// A configured budget (pair limit, chain length, module size) was exhausted.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// Precondition violation: wrong ring, non-prime characteristic, unusable input.
class DomainError : public Error {
public:
    using Error::Error;
};

// Checked integer arithmetic left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

} // namespace charp
