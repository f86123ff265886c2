#pragma once

#include <stdexcept>
#include <string>

namespace pacsent {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (e.g. lgamma(x<=0)).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input outside the supported numeric range.
class RangeError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The two superposition branches are numerically the same ray.
class DegenerateSpecError : public Error {
 public:
  using Error::Error;
};

/// Fock truncation cannot be certified, or dimensions disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class BracketFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed user-supplied structure: spec, grid, config.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace pacsent
