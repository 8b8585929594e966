#pragma once

#include <stdexcept>

namespace kproj {

// Exit codes used by the CLI. Library code signals them through the
// exception types below; the CLI maps each type to its code.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,
  kExitResource = 3,
  kExitUnsupported = 4,
};

// Malformed input: bad file contents, index out of range, length mismatch.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation would exceed a configured enumeration cap. Always explicit,
// never a silent truncation.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested operation is not defined for these parameters
// (e.g. the pairwise-constraint fast path on a non-binary alphabet).
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kproj
