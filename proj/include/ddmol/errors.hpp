#pragma once

#include <stdexcept>
#include <string>

namespace ddmol {

/// Invalid configuration, malformed input file, or bad CLI usage.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A physical precondition was violated (bad parameters, a rotation on a
/// molecule in (0,2), a gate on uncoupled molecules, ...).
class PhysicsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Circuit text that cannot be parsed. Carries the 1-based line number.
class ParseError : public ConfigError {
public:
    ParseError(std::size_t line, const std::string& what)
        : ConfigError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace ddmol
