#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vnum {

/// Mathematical or input-domain failure (bad ambient, zero ideal, non-m-primary input, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exponent arithmetic left the 64-bit range.
class OverflowError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A text expression could not be parsed. `position` is a 0-based offset into the input.
class ParseError : public DomainError {
public:
    ParseError(const std::string& message, std::size_t position)
        : DomainError(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An exhaustive search would have needed more points than allowed.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t budget, std::uint64_t required)
        : std::runtime_error("search budget exceeded: budget " + std::to_string(budget) +
                             ", required " + std::to_string(required)),
          budget_(budget), required_(required) {}

    std::uint64_t budget() const noexcept { return budget_; }
    std::uint64_t required() const noexcept { return required_; }

private:
    std::uint64_t budget_;
    std::uint64_t required_;
};

}  // namespace vnum
