#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace texttiger {

/// Root of every exception thrown by the toolchain.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based; 0 when the input has no line structure.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A file carries a format header this build does not read.
class VersionError : public Error {
public:
    using Error::Error;
};

/// Invalid or missing configuration (endpoints, paths, flags).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace texttiger
