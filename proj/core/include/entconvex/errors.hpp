#pragma once

#include <stdexcept>
#include <string>

namespace entconvex {

// Invalid quantum numbers, mismatched dimensions, bad configuration.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Solver failures, truncation deficits, tolerance violations on computed data.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace entconvex
