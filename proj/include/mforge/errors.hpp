#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mforge {

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `offset()` is the byte position of the fault.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An exact search ran past its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bramble failed validation; the message names the offending element(s).
class InvalidBramble : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace mforge
