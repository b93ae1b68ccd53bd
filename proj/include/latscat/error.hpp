#pragma once

#include <stdexcept>
#include <string>

namespace latscat {

/// Bad caller input: malformed parameters, windows that do not fit the potential.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation produced data that contradicts a structural invariant
/// (vanishing Wronskian off the band edges, a root at a bracket endpoint, ...).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read, parsed, or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace latscat
