#pragma once

#include <stdexcept>
#include <string>

namespace fbridge {

// Base of every error the library throws. The CLI maps the subclasses onto
// exit codes; anything numerical or resource related ends up as code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured table cap (Bernoulli index, correction order) was exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation exactly at a pole (zeta at s = 1).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The operation is well posed in principle but not supported here.
class UnsupportedParameter : public DomainError {
 public:
  using DomainError::DomainError;
};

// Iteration failed to converge, non-finite samples, and similar.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// A series route was asked to run outside its radius of convergence.
class DivergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Discretization too coarse for the requested parameters.
class ResolutionError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Unknown suite or sweep target, malformed option values.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace fbridge
