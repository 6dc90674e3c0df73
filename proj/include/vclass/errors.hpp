#pragma once

#include <stdexcept>

namespace vclass {

// Argument, domain and range violations use std::invalid_argument,
// std::domain_error and std::range_error. The types below cover the rest.

/// An input is outside the class an operation's claim is made for.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Computed quantities contradict a mathematical identity (e.g. Lyapunov).
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vclass
