#pragma once

#include <stdexcept>
#include <string>

namespace qbounds {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Malformed code file; the message names the offending line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The input code lacks a required structural property (e.g. self-orthogonality).
class StructureError : public Error {
public:
    using Error::Error;
};

/// Work would exceed the exhaustive-enumeration or solver size cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An internal identity failed. Never a valid outcome; indicates a bug.
class InvariantError : public Error {
public:
    using Error::Error;
};

class NoRootError : public Error {
public:
    using Error::Error;
};

class SolverError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace qbounds
