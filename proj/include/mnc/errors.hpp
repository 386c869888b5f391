#ifndef MNC_ERRORS_HPP
#define MNC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mnc {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed user input (PartSet syntax, rational function text, ...).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A configured work limit was hit (Buchberger pair budget, table n ceiling).
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// A precondition on the arguments does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

// Internal consistency failure; indicates a bug rather than bad input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class NonIntegralValue : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

class BelowThreshold : public DomainError {
public:
    using DomainError::DomainError;
};

class NotDisjoint : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace mnc

#endif
