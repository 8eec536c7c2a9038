#pragma once

#include <stdexcept>
#include <string>

namespace rebel {

// Malformed or out-of-range input: bad parameters, structural graph defects,
// schedules that are not permutations.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact solver refused an instance above its configured size bound.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A loop that is proven to terminate ran past its cap. Always a bug.
class IterationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition or internal invariant was broken.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rebel
