#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kei {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data violates a structural requirement (table entry out of range,
/// non-associative multiplication, malformed word, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition, e.g. check_quandle on a
/// table that is not a rack.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded. Never silently truncated.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Text or JSON input could not be parsed. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace kei
