#pragma once

#include <stdexcept>
#include <string>

namespace origami {

// Base for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad or unusable input data. CLI maps this to exit code 2.
struct InputError : Error {
  using Error::Error;
};

// An enumeration or size cap was hit. Never silently truncates.
struct CapExceeded : InputError {
  using InputError::InputError;
};

// A theorem-level consistency check failed. This always means a bug
// (in the library or in the data it was fed). CLI maps this to exit code 1.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace origami
