#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unipat {

/// An input violated an operation's precondition (bad vertex, unbalanced
/// digraph, non-well-formed pattern, size mismatch, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bounded exhaustive search refused to run past its configured limit.
/// Never signals a wrong answer, only the absence of one.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line` is 1-based; 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace unipat
