#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gridspectra {

/// A constructor or operation was called with an out-of-domain argument
/// (zero clique size, vertex index out of range, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input violates a documented precondition of an operation, e.g. an
/// irregular graph handed to the Hoffman identity check.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exhaustive search would exceed its configured limit. Never raised in
/// place of an approximate answer.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A spectral claim outside the exact integral setting (e.g. an eigenvalue
/// that is not an integer).
class UnsupportedClaim : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic left the range of the accumulator type.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based line number of the offending input, 0 when not line-oriented.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gridspectra
