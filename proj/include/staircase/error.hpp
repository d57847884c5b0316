#pragma once

#include <stdexcept>
#include <string>

namespace staircase {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different rings or have different arities.
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Raised when the standard-basis reducer pool outgrows its configured ceiling.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace staircase
