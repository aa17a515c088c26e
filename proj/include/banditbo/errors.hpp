#pragma once

#include <stdexcept>

namespace banditbo {

// Thrown when arguments violate an operation's contract.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a linear-algebra step cannot be completed, e.g. the jitter
// ladder is exhausted. what() carries condition diagnostics of the matrix.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace banditbo
