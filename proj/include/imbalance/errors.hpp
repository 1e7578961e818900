#pragma once

#include <stdexcept>
#include <string>

namespace imbalance {

enum class ErrorKind {
    InvalidGroup,
    Capacity,
    Domain,
    InvalidModulus,
    InvalidTransform,
    NotAFunction,
    Inapplicable,
    Parse,
    Schema,
    Usage,
    IdentityViolation,
    Internal,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above; the
/// CLI maps kinds to its exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace imbalance
