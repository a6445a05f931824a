#pragma once

#include <stdexcept>
#include <string>

namespace fibsum {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A certified computation could not be completed at the requested
/// precision. Retrying with more bits is expected to succeed.
class InsufficientPrecision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fibsum
