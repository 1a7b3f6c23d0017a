#pragma once

#include <stdexcept>
#include <string>

namespace galleon {

// Caller passed arguments that do not fit the operation (wrong convention,
// unknown class name, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of the operation (n < 1, a series
// with nonzero constant term passed to a geometric sum, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A functional equation did not behave as a contraction.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exact computation produced a value that cannot be a count
// (odd bracket before halving, non-integral EGF coefficient, ...).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Request exceeds a practical size bound.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace galleon
