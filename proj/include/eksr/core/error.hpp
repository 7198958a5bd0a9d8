#pragma once

#include <stdexcept>
#include <string>

namespace eksr {

// Base for every recoverable failure raised by the library. The CLI maps
// these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller asked for something outside an operation's contract (length
// mismatch, bad parameter, invalid width).
class DomainError : public Error {
public:
    using Error::Error;
};

// A configured enumeration or memory cap would be exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

enum class ParseErrorKind {
    MalformedHeader,
    MissingHeader,
    WrongLiteralCount,
    DuplicateVariable,
    VariableOutOfRange,
    ClauseCountMismatch,
    MalformedAssignment,
    BitstringLengthMismatch,
    MissingAssignment,
    EndpointNotSatisfying,
    UnexpectedLine,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& detail);

    ParseErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

}  // namespace eksr
