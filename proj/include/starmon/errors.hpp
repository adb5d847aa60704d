#pragma once

#include <stdexcept>
#include <string>

namespace starmon {

  // Base class for every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A precondition on an argument was violated (bad degree, unknown letter,
  // degree mismatch, malformed text, ...).
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  // A configured resource budget (degree cap, element cap, ...) was hit.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

}  // namespace starmon
