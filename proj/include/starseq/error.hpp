#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starseq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph input. line() is 1-based, or 0 when the error is not tied
// to a particular line (graph6 strings, empty input).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Argument outside the domain where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A star or frequency sequence that no simple graph can have.
class InconsistentSequence : public Error {
 public:
  using Error::Error;
};

}  // namespace starseq
