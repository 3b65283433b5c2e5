#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skeinlab {

// Base for every error the library raises deliberately.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: degree mismatch, out-of-range index, shape mismatch.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class GroupError : public Error {
 public:
  using Error::Error;
};

// An intermediate tensor would exceed the configured rank guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// Enumeration or recursion exceeded its term budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace skeinlab
