#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace perfcode {

// Caller passed arguments that can never be valid (length mismatch, bad index, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is well-formed but does not satisfy an operation's mathematical precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exhaustive computation would exceed the configured size budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    // 1-based; 0 when the error concerns the file as a whole.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace perfcode
