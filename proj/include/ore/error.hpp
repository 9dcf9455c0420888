#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ore {

/// Raised when an input violates an operation's precondition (bad context,
/// dimension mismatch, non-nucleus element where one is required, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public PreconditionError {
public:
    SyntaxError(const std::string& what, std::size_t line, std::size_t column)
        : PreconditionError(what + " at line " + std::to_string(line) + ", column " +
                            std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A result contradicts a proven bound or a self-check failed. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ore
