#pragma once

#include <stdexcept>
#include <string>

namespace titeica {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A function was evaluated outside its domain (pole, log of a non-positive
/// value, point outside a window, sample off the solution manifold).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A jet of the wrong order was supplied, or an order above the supported
/// maximum was requested.
class OrderError : public Error {
 public:
  using Error::Error;
};

/// Malformed arguments: base-point mismatch, empty grids, degenerate
/// initial data and similar contract violations.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Iterative numerics failed: quadrature or series non-convergence, ODE
/// blow-up, unstable marching.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A file could not be written or read back.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace titeica
