#pragma once

#include <stdexcept>
#include <string>

namespace skregion {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown or colliding variable name.
class NameError : public Error {
 public:
  using Error::Error;
};

/// Tensor/kernel dimension mismatch.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument combination (overlapping sets, inconsistent alpha, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its documented range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file (syntax or schema).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a probability invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Operation invoked on a model that fails its structural precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Search would exceed the configured evaluation budget.
class CostError : public Error {
 public:
  using Error::Error;
};

/// Too few samples to produce a meaningful estimate.
class UnderpoweredError : public Error {
 public:
  using Error::Error;
};

/// Numerical consistency violation (measure more negative than tolerance).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace skregion
