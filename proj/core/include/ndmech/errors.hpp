#pragma once

#include <stdexcept>
#include <string>

namespace ndmech {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A semantically invalid request: unknown names, mismatched spaces, wrong
/// kind of input file. CLI maps these to exit code 2.
class SemanticError : public Error {
public:
    using Error::Error;
};

/// Two values living over different state spaces were combined.
class SpaceMismatchError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

/// A name lookup failed (state name, variable name, ...).
class LookupError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

/// Malformed textual input. line/column are 1-based; 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line = 0, int column = 0)
        : Error(format(message, line, column)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& message, int line, int column) {
        if (line <= 0) return message;
        return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    }
    int line_;
    int column_;
};

/// A condition the library guarantees can never occur did occur.
/// CLI maps these to exit code 3.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace ndmech
