#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plectic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coordinate, multi-index or basis index lies outside the chart.
class IndexError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Operands live on charts of different dimension.
class ChartMismatch : public Error {
 public:
  using Error::Error;
};

/// Operands have incompatible degrees (e.g. adding a 1-form to a 2-form).
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

/// A theorem-level invariant failed to hold. Indicates a bug, never bad input.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace plectic
