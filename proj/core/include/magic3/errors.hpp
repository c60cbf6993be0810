#ifndef MAGIC3_ERRORS_HPP_
#define MAGIC3_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace magic3 {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An entry or coefficient left the 64-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Malformed square text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input violates a domain rule (not magic, not reduced, illegal coordinates).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A line sum differs from the first row sum.
class NotMagic : public DomainError {
public:
    NotMagic(std::string line, std::uint64_t expected, std::uint64_t actual);

    const std::string& line() const noexcept { return line_; }
    std::uint64_t expected() const noexcept { return expected_; }
    std::uint64_t actual() const noexcept { return actual_; }

private:
    std::string line_;
    std::uint64_t expected_;
    std::uint64_t actual_;
};

/// Two entries of the grid coincide.
class DuplicateEntries : public DomainError {
public:
    explicit DuplicateEntries(std::uint64_t value);

    std::uint64_t value() const noexcept { return value_; }

private:
    std::uint64_t value_;
};

class NotReduced : public DomainError {
public:
    using DomainError::DomainError;
};

class IllegalCoordinates : public DomainError {
public:
    using DomainError::DomainError;
};

/// Raised when an internal invariant fails. Seeing one means a bug or
/// input that bypassed validation.
class InternalContradiction : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The integer form of the counting quasi-polynomial was not divisible by 3.
class DivisibilityViolation : public InternalContradiction {
public:
    using InternalContradiction::InternalContradiction;
};

}  // namespace magic3

#endif  // MAGIC3_ERRORS_HPP_
