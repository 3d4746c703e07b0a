#pragma once

#include <stdexcept>
#include <string>

namespace singer {

// Operand or parameter outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Size cap exceeded or a count out of range.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// A documented precondition of the operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation is not available for this kind of input (e.g. infinite groups).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace singer
