#pragma once

#include <stdexcept>
#include <string>

namespace msetdim {

/// Thrown by operations that require a connected graph (diameter, solver
/// entry points, code verifiers) when the input is not connected.
class DisconnectedError : public std::invalid_argument {
public:
    explicit DisconnectedError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Thrown when an exhaustive computation would exceed a configured guard
/// (vertex count, subset budget or wall-clock budget). The caller asked
/// for more work than allowed; nothing is approximated.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

/// Input text could not be parsed. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                      : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

} // namespace msetdim
