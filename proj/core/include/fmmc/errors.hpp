#pragma once

#include <stdexcept>
#include <string>

namespace fmmc {

// Malformed arguments: bad indices, mismatched sizes, out-of-range parameters.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance exceeds a desk-scale cap of an exact or dense algorithm.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An iterative or pivoting routine could not produce a trustworthy answer.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fmmc
