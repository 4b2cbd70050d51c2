#pragma once

#include <stdexcept>
#include <string>

namespace rmot {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad input data: schema violations, broken invariants, malformed flags.
/// The CLI maps these to exit code 2.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Unrecoverable failure while parsing structured model output.
class ParseError : public ValidationError {
public:
    ParseError(int line, const std::string& msg)
        : ValidationError("line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// An external oracle endpoint could not be reached or kept failing.
/// The CLI maps these to exit code 3.
class OracleError : public Error {
public:
    explicit OracleError(const std::string& msg) : Error(msg) {}
};

}  // namespace rmot
