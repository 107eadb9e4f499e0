#pragma once

#include <stdexcept>
#include <string>

namespace cmperiods {

/// Input outside an operation's domain (bad discriminant, non-positive
/// argument, violated precondition).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A pole of the continued function was requested.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A numeric procedure could not reach the requested accuracy.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, int achieved_digits)
      : std::runtime_error(what), achieved_digits_(achieved_digits) {}

  int achieved_digits() const noexcept { return achieved_digits_; }

 private:
  int achieved_digits_;
};

/// Two exact computations that must agree did not. Always a bug, never bad
/// input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cmperiods
