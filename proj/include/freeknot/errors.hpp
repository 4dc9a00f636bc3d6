#pragma once

#include <stdexcept>
#include <string>

namespace freeknot {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition. CLI exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An explicit work budget ran out before the computation finished.
// CLI exit code 3.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. This indicates a bug, not bad
// input. CLI exit code 4.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace freeknot
