#pragma once

#include <stdexcept>
#include <string>

namespace sfwm {

/// Base for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: non-physical parameters, malformed documents, unknown keys.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A closed form was requested outside the regime it describes.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Numerical evaluation could not meet its accuracy contract
/// (grid truncation, quadrature failure).
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace sfwm
