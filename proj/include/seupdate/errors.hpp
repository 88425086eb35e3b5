#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seupdate {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed program text. Line and column are 1-based.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& what)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Unknown atom, mismatched alphabets, or an alphabet too large for an operation.
class AlphabetError : public Error {
public:
    using Error::Error;
};

/// Exhaustive checking requested over an alphabet beyond the supported bound.
class UnsupportedSizeError : public Error {
public:
    using Error::Error;
};

/// A union of minima that is not closed under X -> X*.
class WellDefinednessError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace seupdate
