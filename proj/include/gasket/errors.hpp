#pragma once

#include <stdexcept>
#include <string>

namespace gasket {

// Error taxonomy shared by the library and the CLI exit-code mapping.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad arguments or values outside an operation's contract.
struct DomainError : Error {
  using Error::Error;
};

// Enumeration limits: level caps, sum budgets.
struct ResourceError : Error {
  using Error::Error;
};

// A checked internal invariant failed; indicates a bug, not user error.
struct InvariantError : Error {
  using Error::Error;
};

// int64 rational arithmetic left its guarded range.
struct OverflowError : InvariantError {
  using InvariantError::InvariantError;
};

}  // namespace gasket
