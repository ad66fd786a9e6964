#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valgb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an argument violates a documented precondition
/// (non-homogeneous input, mismatched rings, zero divisor, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Raised when a configured step or size budget is exhausted.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Raised by the lifting step when the claimed initial ideal does not
/// match the rank structure of the degree matrices.
class InconsistentInitialIdeal : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace valgb
