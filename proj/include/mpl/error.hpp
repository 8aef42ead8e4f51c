#pragma once

#include <stdexcept>
#include <string>

namespace mpl {

// Validation failures: bad shapes, bad coefficients, malformed input.
// The CLI maps these to exit code 1.

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotRowFiniteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidCoefficientError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold (e.g. a
// non-canonical DBM handed to the affine image).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Internal invariant violated (exit code 2). Never thrown on valid input.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mpl
