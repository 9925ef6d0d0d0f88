#pragma once

#include <stdexcept>

namespace cactus {

// Domain-level failure: the input is well-formed but the requested object
// does not exist (plane outside the span, empty quotient, ...).  The CLI
// maps this to exit code 1; every other exception maps to exit code 2.
class domain_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured object budget.
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cactus
