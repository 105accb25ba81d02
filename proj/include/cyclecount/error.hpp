#pragma once

#include <stdexcept>
#include <string>

namespace cyclecount {

// Base for every error raised by the library. The CLI maps all of these to
// exit code 2 (invalid input).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad word syntax, labels outside the alphabet, dangling
// vertex references, unparsable JSON payloads.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A well-formed input that violates an operation's precondition
// (non-simple word, nondeterministic graph, disconnected graph, ...).
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// A search or enumeration bound was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclecount
