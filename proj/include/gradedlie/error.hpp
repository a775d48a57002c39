#ifndef GRADEDLIE_ERROR_HPP
#define GRADEDLIE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gradedlie {

/// Bad user input: unknown type, rank out of range, malformed marked set.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A structural identity that must hold failed; always a bug in the
/// construction, never a user error.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace gradedlie

#endif  // GRADEDLIE_ERROR_HPP
