#pragma once

#include <stdexcept>
#include <string>

namespace kcs {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Domain-object validation failure (bad degrees, curvature mismatch, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Two values from different rings (or Koszul data) were combined.
class RingMismatchError : public ValidationError {
public:
    explicit RingMismatchError(const std::string& what) : ValidationError(what) {}
};

/// Requested feature is intentionally outside the supported fragment.
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& what) : Error(what) {}
};

/// A configured computation cap (Groebner step limit, ...) was exceeded.
class ComputationLimitError : public Error {
public:
    explicit ComputationLimitError(const std::string& what) : Error(what) {}
};

/// Script syntax or static-semantics failure, with source position.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error("line " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line(line), column(column), message(what) {}

    int line;
    int column;
    std::string message;
};

} // namespace kcs
