#pragma once

#include <stdexcept>
#include <string>

namespace toric_split {

/// Malformed or out-of-range user input (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size bound was exceeded (CLI exit code 3).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A coefficient cannot live in the requested field, e.g. 1/3 over F_3,
/// or a group average over a field whose characteristic divides the order.
class CoefficientDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A graded complex whose boundaries do not compose to zero.
class ComplexIntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An operation received an argument outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace toric_split
