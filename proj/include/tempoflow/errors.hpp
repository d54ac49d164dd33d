#pragma once

#include <stdexcept>
#include <string>

namespace tempoflow {

// Invalid input, violated precondition or malformed file. CLI exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration or expansion would exceed a configured cap. CLI exit code 3.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed-point iteration did not converge. CLI exit code 4.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A self-check on a produced certificate failed. Indicates a bug.
class CertificateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tempoflow
