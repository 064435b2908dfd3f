#pragma once

#include <stdexcept>
#include <string>

namespace isoacm {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input or violated precondition; the CLI maps these to exit code 2.
struct validation_error : error {
  using error::error;
};

// Exact arithmetic left the representable range; never silently wraps.
struct overflow_error : error {
  using error::error;
};

// An internal contract broke (e.g. a criterion the code relies on failed);
// the CLI maps these to exit code 1.
struct invariant_error : error {
  using error::error;
};

}  // namespace isoacm
