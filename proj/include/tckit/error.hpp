#pragma once

#include <stdexcept>
#include <string>

namespace tckit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct FieldMismatch : Error {
    using Error::Error;
};

// Malformed input text (file or command line). Maps to exit code 2.
struct ParseError : Error {
    using Error::Error;
};

// Well-formed input that violates an axiom. Maps to exit code 1.
struct ValidationError : Error {
    using Error::Error;
};

struct ZigzagObstruction : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

} // namespace tckit
