#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace brickwords {

enum class ErrorKind {
  domain,        // an argument outside the operation's domain
  parse,         // malformed morphism spec, config or bundle
  offset_bound,  // a coding offset left the configured bound
  refuted,       // a candidate cannot satisfy the projection identity
  precondition,  // an operation was called on unverified data
  cap_exceeded,  // a search or iteration cap was reached
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::precondition, what) {}
};

/// Syntax error in textual input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorKind::parse, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Raised when a simultaneous coding produces an offset outside [-K, K].
/// Usually means the brick alphabet is infinite (non-primitive pairs).
class OffsetBoundExceeded : public Error {
 public:
  OffsetBoundExceeded(std::size_t position, std::int64_t offset, std::int64_t bound)
      : Error(ErrorKind::offset_bound, "offset " + std::to_string(offset) + " at position " +
                                           std::to_string(position) + " exceeds bound " +
                                           std::to_string(bound)),
        position_(position),
        offset_(offset),
        bound_(bound) {}

  std::size_t position() const noexcept { return position_; }
  std::int64_t offset() const noexcept { return offset_; }
  std::int64_t bound() const noexcept { return bound_; }

 private:
  std::size_t position_;
  std::int64_t offset_;
  std::int64_t bound_;
};

class RefutationError : public Error {
 public:
  RefutationError(const std::string& letter, int row, const std::string& detail)
      : Error(ErrorKind::refuted, "correction map s" + std::to_string(row) + "(" + letter +
                                      ") does not exist: " + detail),
        letter_(letter),
        row_(row) {}

  const std::string& letter() const noexcept { return letter_; }
  int row() const noexcept { return row_; }

 private:
  std::string letter_;
  int row_;
};

}  // namespace brickwords
