#pragma once

#include <stdexcept>
#include <string>

namespace ecc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LengthMismatch : Error { using Error::Error; };
struct ParityMismatch : Error { using Error::Error; };
struct WidthTooLarge : Error { using Error::Error; };
struct IncompleteAssignment : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct UnsupportedDispatch : Error { using Error::Error; };
struct SearchTooLarge : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Input tuple outside the declared promise set. index is the 1-based
// position of the first offending tuple.
struct PromiseViolation : Error {
  int index;
  PromiseViolation(const std::string& what, int idx) : Error(what), index(idx) {}
};

}  // namespace ecc
