#pragma once

#include <stdexcept>
#include <string>

namespace bbg {

// Malformed input: unknown vertex, bad JSON, non-spanning tree, and so on.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold for its arguments.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A topological hypothesis (biconnectivity, simple connectivity) could not be
// certified, so the requested answer is not applicable.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical invariant that must hold failed at runtime. Seeing one of
// these means a bug in this library.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvariantViolation(message);
}

}  // namespace bbg
