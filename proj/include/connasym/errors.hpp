#pragma once

#include <stdexcept>

namespace connasym {

// Error taxonomy shared by all modules. The CLI maps these to exit codes:
// UsageError and DomainError -> 2, ResourceError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid call: mismatched truncation orders, bad ranges,
// streams too short, malformed input syntax.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Mathematically invalid input: non-unit constant term, probability outside
// (0,1), zero coefficient where a hypothesis requires nonzero.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An internal cross-check failed (e.g. a value that must be an integer is
// not). Always indicates a bug upstream, never a caller mistake.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a configured resource cap (exhaustive enumeration size,
// table length, trial budget).
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace connasym
