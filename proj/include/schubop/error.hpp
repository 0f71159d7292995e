#pragma once

#include <stdexcept>
#include <string>

namespace schubop {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live over alphabets of different sizes.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised by exact division when the divisor does not divide the dividend.
class NonDivisible : public Error {
 public:
  using Error::Error;
};

/// A coefficient would leave Z[1/2].
class NonDyadic : public Error {
 public:
  using Error::Error;
};

/// Group element not in the requested Weyl group, or a malformed element.
class MembershipError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the documented range of an operation.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Polynomial exceeded the SCHUBOP_MAX_TERMS guard.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace schubop
