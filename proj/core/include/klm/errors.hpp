#pragma once

#include <stdexcept>
#include <string>

namespace klm {

/// Root of the library's error hierarchy.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated a documented precondition (bad k, mismatched weights,
/// incomparable flats, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// A part list that is not weakly decreasing or contains a non-positive part.
class InvalidPartitionError : public InvalidArgumentError {
 public:
  using InvalidArgumentError::InvalidArgumentError;
};

/// An exact division left a remainder. Raised where an algebraic identity
/// guarantees divisibility, so it always signals a bug upstream.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

/// A flat set failed lattice validation (missing meet, missing extremal
/// flat, bad grading). The message names the offending flats.
class LatticeError : public Error {
 public:
  using Error::Error;
};

/// A built-in cross-check failed (palindromic defect, positivity of final
/// coefficients). Never caused by valid input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A request exceeded a configured size bound.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace klm
