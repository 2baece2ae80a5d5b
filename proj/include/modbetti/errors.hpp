#pragma once

#include <stdexcept>
#include <string>

namespace modbetti {

// Bad user input: out-of-range parameters, malformed files. CLI exit code 1.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested truncation / extension range exceeds what the data supports. CLI exit code 2.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical invariant failed (non-integer count, non-polynomial Poincare
// polynomial, ...). Always a bug or a broken input convention. CLI exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Division whose result is not representable in the factored-denominator form.
class NotRepresentable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace modbetti
