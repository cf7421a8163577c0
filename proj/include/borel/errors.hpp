#ifndef BOREL_ERRORS_HPP
#define BOREL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace borel {

/// Raised when caller-supplied data violates an operation's preconditions
/// (bad family/rank, non-root in a root set, set that is not an ideal, ...).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a requested computation exceeds a configured size bound.
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Never expected for supported root systems.
class StructuralError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace borel

#endif // BOREL_ERRORS_HPP
