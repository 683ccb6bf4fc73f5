#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lindex {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position` is a zero-based byte offset.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Caller-side contract violation: mismatched dimensions, bad grid sizes,
/// out-of-range orders, a sample cap that would be exceeded.
class DomainError : public Error {
public:
  using Error::Error;
};

/// The numerics failed on valid input: division by zero at a sample, a
/// nonpositive weight, overflow, quadrature that did not converge.
class NumericalError : public Error {
public:
  using Error::Error;
};

}  // namespace lindex
