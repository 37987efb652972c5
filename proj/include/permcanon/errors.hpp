#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permcanon {

/// Bad input to an operation: degree mismatch, out-of-range point,
/// malformed cycles, inconsistent symmetry descriptor.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed external encoding (extended images, JSON, compact text).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured budget (enumeration cap, candidate-table memory) was exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInOrbitError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Expression text could not be parsed. `position()` is a 0-based column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Expression parsed but is not a valid tensor monomial (unknown head,
/// arity mismatch, dummy used with the same variance twice, ...).
class InvalidExpression : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace permcanon
