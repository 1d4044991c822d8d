#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfreduce {

enum class ErrorKind {
    InvalidColoring,
    InvalidParameter,
    InvalidPair,
    InvalidSet,
    InvalidAssignment,
    ContractViolation,
    SizeLimit,
    Generation,
    Parse,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit code without string matching.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace cfreduce
