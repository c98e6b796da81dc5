#pragma once

#include <stdexcept>
#include <string>

#include "extlift/sign.hpp"

namespace extlift {

/// Input that violates an operation's precondition (not a basis, wrong ground
/// set, malformed chirotope, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A sign map or realization that is not generic: some circuit or cocircuit is
/// assigned sign zero. Carries the offending signed set.
class NotGeneric : public std::runtime_error {
 public:
  NotGeneric(const std::string& what, SignedSet witness) : std::runtime_error(what), witness_(witness) {}
  const SignedSet& witness() const { return witness_; }

 private:
  SignedSet witness_;
};

/// Raised when a proven structural property fails to hold (e.g. a bounded
/// region with zero or two optimal bases). Always indicates a construction bug
/// or an input that is not an oriented matroid.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace extlift
