#pragma once

#include <stdexcept>
#include <string>

namespace momdec {

/// Base class for all momdec exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A moment sequence does not reach the degree an operation requires.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Two objects live in different ambient dimensions or have mismatched sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix required to be positive definite is not.
class NotPositiveDefiniteError : public Error {
 public:
  NotPositiveDefiniteError(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue(min_eigenvalue) {}
  double min_eigenvalue;
};

}  // namespace momdec
