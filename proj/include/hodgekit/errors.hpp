#pragma once

#include <stdexcept>
#include <string>

namespace hodgekit {

/// Base of all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what, std::string witness = {})
        : std::runtime_error(what), witness_(std::move(witness)) {}

    /// Optional machine-readable detail (usually a JSON fragment).
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

/// Input data violates a precondition or schema (CLI exit code 1).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A theorem-guaranteed property failed on validated input (CLI exit code 2).
class Inconsistent : public Error {
public:
    using Error::Error;
};

}  // namespace hodgekit
