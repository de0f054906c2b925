#pragma once

#include <stdexcept>

namespace teuler {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition. The CLI maps this to exit code 2.
struct InputError : Error {
  using Error::Error;
};

// A broken internal invariant (e.g. a signed inclusion-exclusion total that
// came out negative). Always a bug, never a property of the input. Exit
// code 3 in the CLI.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace teuler
