#pragma once

#include <stdexcept>
#include <string>

namespace cyclic_shape {

/// Error categories. The numeric values double as CLI exit codes.
enum class ErrorKind {
    invariant = 1,   // a checked identity failed
    validation = 2,  // input is outside the domain of the construction
    parse = 3,       // malformed input text / JSON
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message)
        : Error(ErrorKind::validation, message) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& message)
        : Error(ErrorKind::parse, message) {}
};

class InvariantError : public Error {
public:
    explicit InvariantError(const std::string& message)
        : Error(ErrorKind::invariant, message) {}
};

}  // namespace cyclic_shape
